// Copyright 2026 The chronoflip developers
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

#include "chronoflip/channel.hpp"

#include <json.hpp>

namespace chronoflip {

// JSON conventions: complex scalars as [re, im] pairs of doubles, matrices as
// row-major nested arrays, channels as {"d_in": n, "d_out": m, "kraus": [...]}.

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

nlohmann::json channel_to_json(const Channel& c);
Channel channel_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

Channel load_channel(const std::string& path);
void save_channel(const std::string& path, const Channel& c);
/// Accepts either a bare matrix or {"matrix": ...}.
ComplexMatrix load_matrix(const std::string& path);

}  // namespace chronoflip
