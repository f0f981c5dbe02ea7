// Copyright 2026 The Deontic Toolkit Authors.
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

#ifndef DEONTIC_ERROR_H_
#define DEONTIC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace deontic {

enum class ErrorKind {
  kIngest,      // unreadable input document
  kParse,       // malformed line or bracket string
  kStructural,  // well-formed input describing an invalid tree
  kAlignment,   // token surfaces do not match sentence text
  kConfig,      // missing or inconsistent configuration
  kValidation,  // domain-type invariant violated by caller input
  kUsage,       // wrong arity or mismatched arguments
  kUndefined,   // statistic undefined for the given data
  kDependency,  // a required upstream artifact is missing
  kInternal,    // inconsistency that indicates a bug upstream
};

std::string_view ErrorKindName(ErrorKind kind);

// All toolkit failures are reported as deontic::Error. The module name is
// carried so the CLI can surface where a failure originated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string &message);

  ErrorKind kind() const { return kind_; }
  const std::string &module() const { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

}  // namespace deontic

#endif  // DEONTIC_ERROR_H_
