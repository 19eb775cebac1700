// Copyright 2026 The gr4sd Authors
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

#include <string>

#include "json.hpp"

#include "gr4sd/codegen.hpp"
#include "gr4sd/gr4.hpp"
#include "gr4sd/polyring.hpp"

namespace gr4sd {

using Json = nlohmann::ordered_json;

/// Monomial basis: array of ring-element strings, index = power of x.
Json to_json(const RingPoly& a);
/// {"basis":"xm1","comps":[...]}.
Json to_json(const RingXM1& a);
Json to_json(const FieldXM1& a);

/// Throws Error{ParseError}.
RingPoly ring_poly_from_json(const RingCtx& ring, int k, const Json& j);
RingXM1 ring_xm1_from_json(const RingCtx& ring, int k, const Json& j);

/// {"k","m","case","s","params","bvec","f","g2"}; f is null for the trivial code.
Json code_to_json(const CodeSpec& spec, const RingCtx& ring);
/// One line carrying the same fields as code_to_json.
std::string code_to_text(const CodeSpec& spec, const RingCtx& ring);

struct CodeRecord {
  int m;
  CodeSpec spec;
  GeneratorPair pair;
};

/// Reads a record written by code_to_json. The generator polynomials are
/// taken from the record as given, not rebuilt from the parameters.
/// Throws Error{ParseError} or Error{ContextMismatch} (m differs from ring).
CodeRecord code_from_json(const Json& j, const RingCtx& ring);

}  // namespace gr4sd
