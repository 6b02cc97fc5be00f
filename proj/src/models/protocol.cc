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

#include "eamex/models/protocol.h"

#include "eamex/core/error.h"
#include "json.hpp"

namespace eamex::protocol {
namespace {

using Json = nlohmann::ordered_json;

Json MatrixToJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.Row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

Matrix MatrixFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("row is not an array");
    std::vector<double> values;
    values.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number()) throw std::invalid_argument("non-numeric cell");
      values.push_back(v.get<double>());
    }
    m.AppendRow(values);
  }
  return m;
}

[[noreturn]] void Fail(std::string_view line, const std::string& why) {
  throw TransportError("protocol violation (" + why + ") in line: " +
                       std::string(line));
}

Json ParseObject(std::string_view line) {
  Json j = Json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) Fail(line, "not a JSON object");
  if (!j.contains("id") || !j["id"].is_number_unsigned()) {
    Fail(line, "missing unsigned id");
  }
  return j;
}

}  // namespace

std::string_view OpName(Op op) {
  switch (op) {
    case Op::kInfo:
      return "info";
    case Op::kPredict:
      return "predict";
    case Op::kPredictProba:
      return "predict_proba";
  }
  return "unknown";
}

std::string EncodeRequest(const Request& request) {
  Json j;
  j["id"] = request.id;
  j["op"] = OpName(request.op);
  if (request.op != Op::kInfo) {
    j["rows"] = request.rows ? MatrixToJson(*request.rows) : Json::array();
  }
  return j.dump();
}

std::string EncodeResponse(const Response& response) {
  Json j;
  j["id"] = response.id;
  if (response.error) {
    j["error"] = *response.error;
  } else if (response.predictions) {
    j["predictions"] = *response.predictions;
  } else if (response.probabilities) {
    j["probabilities"] = MatrixToJson(*response.probabilities);
  } else if (response.task) {
    j["task"] = TaskName(*response.task);
    j["n_features"] = response.n_features.value_or(0);
  }
  return j.dump();
}

Request DecodeRequest(std::string_view line) {
  const Json j = ParseObject(line);
  Request request;
  request.id = j["id"].get<std::uint64_t>();
  if (!j.contains("op") || !j["op"].is_string()) Fail(line, "missing op");
  const auto op = j["op"].get<std::string>();
  if (op == "info") {
    request.op = Op::kInfo;
    return request;
  }
  if (op == "predict") {
    request.op = Op::kPredict;
  } else if (op == "predict_proba") {
    request.op = Op::kPredictProba;
  } else {
    Fail(line, "unknown op '" + op + "'");
  }
  if (!j.contains("rows")) Fail(line, "missing rows");
  try {
    request.rows = MatrixFromJson(j["rows"]);
  } catch (const std::exception& e) {
    Fail(line, e.what());
  }
  return request;
}

Response DecodeResponse(std::string_view line) {
  const Json j = ParseObject(line);
  Response response;
  response.id = j["id"].get<std::uint64_t>();
  try {
    if (j.contains("error")) {
      response.error = j["error"].get<std::string>();
    } else if (j.contains("predictions")) {
      const auto& p = j["predictions"];
      if (!p.is_array()) throw std::invalid_argument("predictions not an array");
      std::vector<double> values;
      for (const auto& v : p) {
        if (!v.is_number()) throw std::invalid_argument("non-numeric prediction");
        values.push_back(v.get<double>());
      }
      response.predictions = std::move(values);
    } else if (j.contains("probabilities")) {
      response.probabilities = MatrixFromJson(j["probabilities"]);
    } else if (j.contains("task")) {
      response.task = ParseTask(j["task"].get<std::string>());
      if (!j.contains("n_features") || !j["n_features"].is_number_unsigned()) {
        throw std::invalid_argument("missing n_features");
      }
      response.n_features = j["n_features"].get<std::uint64_t>();
    } else {
      throw std::invalid_argument("no payload");
    }
  } catch (const TransportError&) {
    throw;
  } catch (const std::exception& e) {
    Fail(line, e.what());
  }
  return response;
}

}  // namespace eamex::protocol
