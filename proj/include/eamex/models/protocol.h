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

#ifndef EAMEX_MODELS_PROTOCOL_H_
#define EAMEX_MODELS_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eamex/core/matrix.h"
#include "eamex/core/types.h"

// Line-delimited JSON messages exchanged with an external model process.
// Each message is one compact JSON object terminated by a single LF:
//
//   -> {"id":0,"op":"info"}
//   <- {"id":0,"task":"regression","n_features":3}
//   -> {"id":1,"op":"predict","rows":[[1.0,2.0,3.0]]}
//   <- {"id":1,"predictions":[6.0]}
//   -> {"id":2,"op":"predict_proba","rows":[[1.0,2.0,3.0]]}
//   <- {"id":2,"probabilities":[[0.25,0.75]]}
//   <- {"id":2,"error":"message"}
namespace eamex::protocol {

enum class Op { kInfo, kPredict, kPredictProba };

std::string_view OpName(Op op);

struct Request {
  std::uint64_t id = 0;
  Op op = Op::kInfo;
  // Absent for kInfo.
  std::optional<Matrix> rows;

  friend bool operator==(const Request&, const Request&) = default;
};

// Exactly one payload group is set: predictions, probabilities, error, or
// the (task, n_features) info pair.
struct Response {
  std::uint64_t id = 0;
  std::optional<std::vector<double>> predictions;
  std::optional<Matrix> probabilities;
  std::optional<std::string> error;
  std::optional<Task> task;
  std::optional<std::uint64_t> n_features;

  friend bool operator==(const Response&, const Response&) = default;
};

// Encoders return the line without the trailing LF.
std::string EncodeRequest(const Request& request);
std::string EncodeResponse(const Response& response);

// Decoders throw TransportError quoting the offending line.
Request DecodeRequest(std::string_view line);
Response DecodeResponse(std::string_view line);

}  // namespace eamex::protocol

#endif  // EAMEX_MODELS_PROTOCOL_H_
