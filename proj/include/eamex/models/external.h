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

#ifndef EAMEX_MODELS_EXTERNAL_H_
#define EAMEX_MODELS_EXTERNAL_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

#include "eamex/models/model.h"
#include "eamex/models/protocol.h"

namespace eamex {

struct ExternalModelOptions {
  // Run through /bin/sh -c.
  std::string command;
  std::chrono::milliseconds timeout{30000};
  // Class count used to validate probability widths; 0 accepts any width
  // of at least 2.
  int num_classes = 0;
};

// Model served by a child process speaking the JSON-lines protocol on its
// standard streams. Requests from concurrent callers are serialized through
// one channel; each Predict call is a single request.
class ExternalProcessModel final : public Model {
 public:
  // Spawns the child and performs the info handshake.
  static std::shared_ptr<ExternalProcessModel> Launch(
      std::string name, const ExternalModelOptions& options);

  ~ExternalProcessModel() override;

  ModelKind kind() const override { return ModelKind::kExternalProcess; }

 protected:
  PredictionSet DoPredict(const Matrix& rows) const override;

 private:
  class Channel;

  ExternalProcessModel(std::string name, Task task, std::size_t num_features,
                       int num_classes, std::unique_ptr<Channel> channel);

  protocol::Response Exchange(protocol::Request request) const;

  mutable std::mutex mutex_;
  std::unique_ptr<Channel> channel_;
  mutable std::uint64_t next_id_ = 1;
};

}  // namespace eamex

#endif  // EAMEX_MODELS_EXTERNAL_H_
