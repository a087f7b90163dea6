// Copyright 2026 The gaitdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gaitdyn {

/// Raised when an input violates a documented precondition. The message is
/// prefixed with the originating module, e.g. "geometry: ...".
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string module, const std::string& message);

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

}  // namespace gaitdyn
