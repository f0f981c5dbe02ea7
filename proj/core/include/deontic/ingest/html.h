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

#ifndef DEONTIC_INGEST_HTML_H_
#define DEONTIC_INGEST_HTML_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "deontic/ingest/provision.h"

namespace deontic::ingest {

// Splits an HTML document into provisions, one per <p> or <div> element in
// document order. Each element contributes its own text (text inside nested
// <p>/<div> elements belongs to those elements). Elements whose normalized
// text is empty are not emitted; their emitted descendants attach to the
// nearest emitted ancestor.
//
// Parsing is tolerant: unclosed <p> elements are closed by the next <p> or by
// the end of the enclosing <div>, stray end tags are ignored, and <script>,
// <style> and comments are dropped. Character entities are decoded and
// whitespace is collapsed to single spaces.
std::vector<Provision> ExtractProvisions(std::string_view html,
                                         const std::string &contract_id);

// Reads `path` and extracts its provisions. Throws Error(kIngest) naming the
// document when the file cannot be read.
std::vector<Provision> ExtractProvisionsFromFile(
    const std::filesystem::path &path, const std::string &contract_id);

// Decodes named and numeric character references. Unknown references are
// kept verbatim.
std::string DecodeEntities(std::string_view s);

}  // namespace deontic::ingest

#endif  // DEONTIC_INGEST_HTML_H_
