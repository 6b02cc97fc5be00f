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

#include "eamex/models/external.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "eamex/core/error.h"

namespace eamex {

// Owns the child process and our end of a socketpair wired to its stdin and
// stdout. A socket (rather than a pipe) lets writes use MSG_NOSIGNAL, so a
// dead child surfaces as an error instead of SIGPIPE.
class ExternalProcessModel::Channel {
 public:
  Channel(const std::string& command, std::chrono::milliseconds timeout)
      : command_(command), timeout_(timeout) {
    int fds[2];
    if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
      throw TransportError(std::string("socketpair failed: ") +
                           std::strerror(errno));
    }
    pid_ = fork();
    if (pid_ < 0) {
      close(fds[0]);
      close(fds[1]);
      throw TransportError(std::string("fork failed: ") + std::strerror(errno));
    }
    if (pid_ == 0) {
      setpgid(0, 0);
      dup2(fds[1], STDIN_FILENO);
      dup2(fds[1], STDOUT_FILENO);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    setpgid(pid_, pid_);
    close(fds[1]);
    fd_ = fds[0];
  }

  ~Channel() {
    if (fd_ >= 0) {
      shutdown(fd_, SHUT_RDWR);
      close(fd_);
    }
    if (pid_ > 0) {
      for (int i = 0; i < 100; ++i) {
        if (waitpid(pid_, nullptr, WNOHANG) == pid_) {
          kill(-pid_, SIGKILL);  // stray grandchildren of the shell
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
      }
      kill(-pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
    }
  }

  Channel(const Channel&) = delete;
  Channel& operator=(const Channel&) = delete;

  void WriteLine(const std::string& line) {
    std::string data = line + "\n";
    std::size_t sent = 0;
    while (sent < data.size()) {
      const ssize_t n =
          send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw TransportError("model process '" + command_ +
                             "' closed its input: " + std::strerror(errno));
      }
      sent += static_cast<std::size_t>(n);
    }
  }

  std::string ReadLine() {
    const auto deadline = std::chrono::steady_clock::now() + timeout_;
    for (;;) {
      const auto newline = buffer_.find('\n');
      if (newline != std::string::npos) {
        std::string line = buffer_.substr(0, newline);
        buffer_.erase(0, newline + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
      }
      const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (remaining.count() <= 0) {
        throw TransportError("model process '" + command_ +
                             "' timed out after " +
                             std::to_string(timeout_.count()) + " ms");
      }
      pollfd pfd{fd_, POLLIN, 0};
      const int ready = poll(&pfd, 1, static_cast<int>(remaining.count()));
      if (ready < 0) {
        if (errno == EINTR) continue;
        throw TransportError(std::string("poll failed: ") + std::strerror(errno));
      }
      if (ready == 0) continue;
      char chunk[65536];
      ssize_t n = recv(fd_, chunk, sizeof(chunk), 0);
      if (n < 0 && errno == ECONNRESET) n = 0;
      if (n < 0) {
        if (errno == EINTR) continue;
        throw TransportError(std::string("read failed: ") + std::strerror(errno));
      }
      if (n == 0) {
        throw TransportError("model process '" + command_ +
                             "' exited before responding" +
                             (buffer_.empty() ? "" : "; partial line: " + buffer_));
      }
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  std::string command_;
  std::chrono::milliseconds timeout_;
  pid_t pid_ = -1;
  int fd_ = -1;
  std::string buffer_;
};

ExternalProcessModel::ExternalProcessModel(std::string name, Task task,
                                           std::size_t num_features,
                                           int num_classes,
                                           std::unique_ptr<Channel> channel)
    : Model(std::move(name), task, num_features, num_classes),
      channel_(std::move(channel)) {}

ExternalProcessModel::~ExternalProcessModel() = default;

std::shared_ptr<ExternalProcessModel> ExternalProcessModel::Launch(
    std::string name, const ExternalModelOptions& options) {
  if (options.command.empty()) {
    throw ValidationError("external model '" + name + "' has no command");
  }
  auto channel = std::make_unique<Channel>(options.command, options.timeout);
  protocol::Request hello;
  hello.id = 0;
  hello.op = protocol::Op::kInfo;
  channel->WriteLine(protocol::EncodeRequest(hello));
  const std::string line = channel->ReadLine();
  const protocol::Response info = protocol::DecodeResponse(line);
  if (info.error) {
    throw TransportError("model process rejected info request: " + *info.error);
  }
  if (info.id != 0 || !info.task || !info.n_features) {
    throw TransportError("invalid info response: " + line);
  }
  int num_classes = 0;
  if (*info.task == Task::kClassification) {
    num_classes = options.num_classes > 0 ? options.num_classes : 2;
  }
  return std::shared_ptr<ExternalProcessModel>(new ExternalProcessModel(
      std::move(name), *info.task, static_cast<std::size_t>(*info.n_features),
      num_classes, std::move(channel)));
}

protocol::Response ExternalProcessModel::Exchange(
    protocol::Request request) const {
  std::lock_guard lock(mutex_);
  request.id = next_id_++;
  channel_->WriteLine(protocol::EncodeRequest(request));
  const std::string line = channel_->ReadLine();
  protocol::Response response = protocol::DecodeResponse(line);
  if (response.id != request.id) {
    throw TransportError("response id " + std::to_string(response.id) +
                         " does not match request id " +
                         std::to_string(request.id) + " in line: " + line);
  }
  if (response.error) {
    throw TransportError("model '" + name() + "' reported: " + *response.error);
  }
  return response;
}

PredictionSet ExternalProcessModel::DoPredict(const Matrix& rows) const {
  protocol::Request request;
  request.rows = rows;
  if (task() == Task::kRegression) {
    request.op = protocol::Op::kPredict;
    protocol::Response response = Exchange(std::move(request));
    if (!response.predictions || response.predictions->size() != rows.rows()) {
      throw TransportError("model '" + name() + "' returned " +
                           std::to_string(response.predictions
                                              ? response.predictions->size()
                                              : 0) +
                           " predictions for " + std::to_string(rows.rows()) +
                           " rows");
    }
    return PredictionSet(std::move(*response.predictions));
  }

  request.op = protocol::Op::kPredictProba;
  protocol::Response response = Exchange(std::move(request));
  if (!response.probabilities || response.probabilities->rows() != rows.rows() ||
      (rows.rows() > 0 && response.probabilities->cols() !=
                              static_cast<std::size_t>(num_classes()))) {
    throw TransportError("model '" + name() +
                         "' returned a probability matrix of the wrong shape");
  }
  Matrix proba = std::move(*response.probabilities);
  std::vector<double> labels(proba.rows());
  for (std::size_t i = 0; i < proba.rows(); ++i) {
    labels[i] = static_cast<double>(ArgMax(proba.Row(i)));
  }
  try {
    return PredictionSet(std::move(labels), std::move(proba));
  } catch (const ValidationError& e) {
    throw TransportError("model '" + name() + "' returned invalid probabilities: " +
                         e.what());
  }
}

}  // namespace eamex
