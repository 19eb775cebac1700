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

#include "gr4sd/serialize.hpp"

#include <sstream>

#include "gr4sd/error.hpp"

namespace gr4sd {

namespace {

template <class Ctx>
Json xm1_json(const XM1Vector<Ctx>& a) {
  Json comps = Json::array();
  for (const auto& c : a.comps) comps.push_back(to_string(c));
  return Json{{"basis", "xm1"}, {"comps", std::move(comps)}};
}

std::string field_list(const std::vector<FieldElement>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_hex(v[i]);
  }
  return out + "]";
}

std::string poly_list(const RingPoly& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) out += ',';
    out += to_string(a[i]);
  }
  return out + "]";
}

std::vector<RingElement> ring_elements(const RingCtx& ring, int k, const Json& j) {
  if (!j.is_array() || j.size() != cyclic_length(k)) {
    throw Error(Errc::ParseError, "expected an array of " + std::to_string(cyclic_length(k)) + " ring elements");
  }
  std::vector<RingElement> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(Errc::ParseError, "ring element must be a string");
    out.push_back(parse_ring_element(ring, e.get<std::string>()));
  }
  return out;
}

std::vector<FieldElement> field_elements(const FieldCtx& field, const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of field elements");
  std::vector<FieldElement> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(Errc::ParseError, "field element must be a string");
    out.push_back(parse_field_element(field, e.get<std::string>()));
  }
  return out;
}

}  // namespace

Json to_json(const RingPoly& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.length(); ++i) out.push_back(to_string(a[i]));
  return out;
}

Json to_json(const RingXM1& a) { return xm1_json(a); }

Json to_json(const FieldXM1& a) {
  Json comps = Json::array();
  for (const auto& c : a.comps) comps.push_back(to_hex(c));
  return Json{{"basis", "xm1"}, {"comps", std::move(comps)}};
}

RingPoly ring_poly_from_json(const RingCtx& ring, int k, const Json& j) {
  return RingPoly(ring, k, ring_elements(ring, k, j));
}

RingXM1 ring_xm1_from_json(const RingCtx& ring, int k, const Json& j) {
  if (!j.is_object() || j.value("basis", "") != "xm1" || !j.contains("comps")) {
    throw Error(Errc::ParseError, "expected {\"basis\":\"xm1\",\"comps\":[...]}");
  }
  return RingXM1{ring, k, ring_elements(ring, k, j["comps"])};
}

Json code_to_json(const CodeSpec& spec, const RingCtx& ring) {
  const GeneratorPair pair = realize(spec, ring);
  Json params = Json::array();
  for (auto p : spec.params) params.push_back(to_hex(p));
  Json bvec = Json::array();
  for (auto b : spec.bvec) bvec.push_back(to_hex(b));
  return Json{{"k", spec.k},
              {"m", ring.degree()},
              {"case", std::string(to_string(spec.tag))},
              {"s", spec.s},
              {"params", std::move(params)},
              {"bvec", std::move(bvec)},
              {"f", pair.f ? to_json(*pair.f) : Json(nullptr)},
              {"g2", to_json(pair.g2)}};
}

std::string code_to_text(const CodeSpec& spec, const RingCtx& ring) {
  const GeneratorPair pair = realize(spec, ring);
  std::ostringstream out;
  out << "k=" << spec.k << " m=" << ring.degree() << " case=" << to_string(spec.tag) << " s=" << spec.s
      << " params=" << field_list(spec.params) << " bvec=" << field_list(spec.bvec)
      << " f=" << (pair.f ? poly_list(*pair.f) : std::string("none")) << " g2=" << poly_list(pair.g2);
  return out.str();
}

CodeRecord code_from_json(const Json& j, const RingCtx& ring) {
  if (!j.is_object()) throw Error(Errc::ParseError, "code record must be an object");
  for (const char* key : {"k", "m", "case", "s", "params", "bvec", "f", "g2"}) {
    if (!j.contains(key)) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
  }
  if (!j["k"].is_number_integer() || !j["m"].is_number_integer() || !j["s"].is_number_integer() ||
      !j["case"].is_string()) {
    throw Error(Errc::ParseError, "k, m, s must be integers and case a string");
  }
  const int m = j["m"].get<int>();
  if (m != ring.degree()) {
    throw Error(Errc::ContextMismatch,
                "record has m=" + std::to_string(m) + " but the ring has m=" + std::to_string(ring.degree()));
  }
  const int k = j["k"].get<int>();
  if (k < 1 || k > kMaxK) throw Error(Errc::ParseError, "k out of range");
  CodeSpec spec;
  spec.k = k;
  spec.tag = parse_case_tag(j["case"].get<std::string>());
  spec.s = j["s"].get<int>();
  spec.params = field_elements(ring.field(), j["params"]);
  spec.bvec = field_elements(ring.field(), j["bvec"]);
  std::optional<RingPoly> f;
  if (!j["f"].is_null()) f = ring_poly_from_json(ring, k, j["f"]);
  return CodeRecord{m, std::move(spec), GeneratorPair{std::move(f), ring_poly_from_json(ring, k, j["g2"])}};
}

}  // namespace gr4sd
