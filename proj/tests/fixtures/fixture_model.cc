/*
 * Copyright 2026 The EAMEX Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Test model speaking the JSON-lines protocol on stdin/stdout.
//
//   fixture_model linear   --coef 3,1 --intercept 0.5
//   fixture_model logistic --weights 1,-2 --bias 0.1        (binary)
//   fixture_model echo     --features 2                     (returns column 0)
//   fixture_model garbage  --features 2                     (answers predict with junk)
//   fixture_model silent   --features 2                     (never answers predict)
//   fixture_model wrong-id --features 2

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "eamex/core/error.h"
#include "eamex/models/linear.h"
#include "eamex/models/logistic.h"
#include "eamex/models/protocol.h"

namespace {

using eamex::protocol::Op;
using eamex::protocol::Request;
using eamex::protocol::Response;

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) values.push_back(std::stod(cell));
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"protocol test model"};
  std::string mode;
  std::string coef;
  std::string weights;
  double intercept = 0.0;
  double bias = 0.0;
  std::size_t features = 1;
  app.add_option("mode", mode)->required();
  app.add_option("--coef", coef);
  app.add_option("--intercept", intercept);
  app.add_option("--weights", weights);
  app.add_option("--bias", bias);
  app.add_option("--features", features);
  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<eamex::Model> model;
  eamex::Task task = eamex::Task::kRegression;
  if (mode == "linear") {
    std::vector<double> c = ParseList(coef);
    features = c.size();
    model = std::make_unique<eamex::LinearModel>("fixture", std::move(c), intercept);
  } else if (mode == "logistic") {
    std::vector<double> w = ParseList(weights);
    features = w.size();
    eamex::Matrix m(1, w.size());
    std::copy(w.begin(), w.end(), m.Row(0).begin());
    model = std::make_unique<eamex::LogisticModel>("fixture", std::move(m),
                                                   std::vector<double>{bias}, 2);
    task = eamex::Task::kClassification;
  }

  std::string line;
  while (std::getline(std::cin, line)) {
    Response response;
    try {
      const Request request = eamex::protocol::DecodeRequest(line);
      response.id = request.id;
      if (request.op == Op::kInfo) {
        response.task = task;
        response.n_features = features;
      } else if (mode == "garbage") {
        std::cout << "this is not json" << std::endl;
        continue;
      } else if (mode == "silent") {
        std::this_thread::sleep_for(std::chrono::hours(1));
      } else if (mode == "wrong-id") {
        response.id = request.id + 100;
        response.predictions = std::vector<double>(request.rows->rows(), 0.0);
      } else if (mode == "echo") {
        response.predictions = request.rows->Column(0);
      } else if (request.op == Op::kPredictProba) {
        response.probabilities = model->Predict(*request.rows).probabilities();
      } else {
        response.predictions = model->Predict(*request.rows).values();
      }
    } catch (const std::exception& e) {
      response.error = e.what();
    }
    std::cout << eamex::protocol::EncodeResponse(response) << std::endl;
  }
  return 0;
}
