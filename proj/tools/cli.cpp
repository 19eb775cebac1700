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

#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gr4sd/codegen.hpp"
#include "gr4sd/error.hpp"
#include "gr4sd/gf2m.hpp"
#include "gr4sd/gr4.hpp"
#include "gr4sd/kronmat.hpp"
#include "gr4sd/serialize.hpp"
#include "gr4sd/verify.hpp"

namespace gr4sd {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kStreamWarning = 10'000'000;

struct RunConfig {
  int k = 1;
  int m = 1;
  std::optional<std::string> modulus;
  std::optional<int> s;
  std::string format = "text";
  std::optional<std::uint64_t> limit;
  std::uint64_t offset = 0;
  std::string oracle = "structural";
  int max_k = 4;
  int max_m = 2;
  std::uint64_t seed = 1;
  std::optional<int> l;
  std::optional<int> lambda;
  std::string input;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint32_t parse_hex(const std::string& text) {
  std::string_view v = text;
  if (v.starts_with("0x") || v.starts_with("0X")) v.remove_prefix(2);
  std::uint32_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out, 16);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) throw UsageError("bad hex value '" + text + "'");
  return out;
}

std::optional<std::uint32_t> table_modulus(int m) {
  const char* path = std::getenv("GR4_MODULUS_TABLE");
  if (!path || !*path) return std::nullopt;
  std::ifstream file(path);
  if (!file) throw UsageError(std::string("cannot read GR4_MODULUS_TABLE file ") + path);
  std::string line;
  while (std::getline(file, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int degree = 0;
    std::string bits;
    if (!(fields >> degree)) continue;
    if (!(fields >> bits)) throw UsageError("malformed GR4_MODULUS_TABLE line: " + line);
    if (degree == m) return parse_hex(bits);
  }
  return std::nullopt;
}

// Override, then the table file, then the built-in table, then the smallest
// irreducible polynomial of degree m.
FieldCtx resolve_field(int m, const std::optional<std::string>& override_hex) {
  if (m < 1 || m > FieldCtx::kMaxDegree) {
    throw UsageError("--m must be in 1.." + std::to_string(FieldCtx::kMaxDegree));
  }
  if (override_hex) return field_make(m, parse_hex(*override_hex));
  if (const auto t = table_modulus(m)) return field_make(m, *t);
  if (const auto b = builtin_modulus(m)) return field_make(m, *b);
  for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2) {
    if (gf2_is_irreducible(p)) return field_make(m, p);
  }
  throw UsageError("no irreducible polynomial of degree " + std::to_string(m));
}

void check_k(int k) {
  if (k < 1 || k > kMaxK) throw UsageError("--k must be in 1.." + std::to_string(kMaxK));
}

std::string row_bits(const BinMatrix& a, int r) {
  std::string out;
  for (int c = 0; c < a.cols(); ++c) out += a(r, c) ? '1' : '0';
  return out;
}

Json matrix_json(const BinMatrix& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.rows(); ++r) rows.push_back(row_bits(a, r));
  return rows;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg.k);
  resolve_field(cfg.m, cfg.modulus);
  const BigInt n = count(cfg.k, cfg.m);
  if (cfg.format == "json") {
    out << Json{{"k", cfg.k}, {"m", cfg.m}, {"count", n.str()}}.dump() << '\n';
  } else {
    out << n << '\n';
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_k(cfg.k);
  const RingCtx ring = RingCtx::lift(resolve_field(cfg.m, cfg.modulus));
  CodeEnumerator codes(cfg.k, ring.field(), cfg.s);
  if (!cfg.limit && cfg.offset == 0 && codes.size() > kStreamWarning) {
    err << "warning: TooLarge: " << codes.size() << " codes; consider --limit/--offset\n";
  }
  codes.seek(cfg.offset);
  std::uint64_t emitted = 0;
  while (!cfg.limit || emitted < *cfg.limit) {
    const auto spec = codes.next();
    if (!spec) break;
    out << (cfg.format == "json" ? code_to_json(*spec, ring).dump() : code_to_text(*spec, ring)) << '\n';
    ++emitted;
  }
  return 0;
}

struct Verdict {
  bool ok = true;
  std::string reason;
};

Verdict check_record(const CodeRecord& rec, const RingCtx& ring, bool full_oracle) {
  const CodeSpec& spec = rec.spec;
  const int k = spec.k;
  if (spec.s < 0 || spec.s > max_s(k)) return {false, "s out of range"};
  if (spec.tag != case_for(k, spec.s)) return {false, "case does not match s"};
  if (spec.s > 0) {
    if (spec.params.size() != static_cast<std::size_t>(param_length(spec.s))) return {false, "bad params length"};
    if (spec.bvec != gr4sd::apply(param_matrix(k, spec.s), spec.params)) return {false, "bvec does not match params"};
  } else if (!spec.params.empty() || !spec.bvec.empty()) {
    return {false, "trivial code carries parameters"};
  }
  const GeneratorPair expect = realize(spec, ring);
  if (expect.f.has_value() != rec.pair.f.has_value() || (expect.f && !(*expect.f == *rec.pair.f)) ||
      !(expect.g2 == rec.pair.g2)) {
    return {false, "generators do not match the parameters"};
  }
  if (spec.s > 0 && !check_congruence(k, spec.s, two_part_xm1(spec, ring.field()))) {
    return {false, "congruence"};
  }
  if (!is_self_dual_structural(rec.pair)) return {false, "structural self-duality"};
  if (full_oracle && (2ull * static_cast<std::uint64_t>(ring.degree()) << k) <= kBruteForceLog2Guard) {
    if (!(dual_bruteforce(rec.pair, ring) == materialize(rec.pair))) return {false, "brute-force dual differs"};
  }
  return {};
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  std::stringstream buffer;
  if (cfg.input.empty() || cfg.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw UsageError("cannot read " + cfg.input);
    buffer << file.rdbuf();
  }
  const std::string text = buffer.str();
  std::vector<Json> records;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (auto& r : Json::parse(text)) records.push_back(std::move(r));
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      records.push_back(Json::parse(line));
    }
  }

  std::map<int, RingCtx> rings;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Json& j = records[i];
    if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer()) {
      throw Error(Errc::ParseError, "record " + std::to_string(i) + " has no integer m");
    }
    const int m = j["m"].get<int>();
    auto it = rings.find(m);
    if (it == rings.end()) {
      const auto override_hex = m == cfg.m ? cfg.modulus : std::nullopt;
      it = rings.emplace(m, RingCtx::lift(resolve_field(m, override_hex))).first;
    }
    const CodeRecord rec = code_from_json(j, it->second);
    const Verdict v = check_record(rec, it->second, cfg.oracle == "full");
    out << "code " << i << " k=" << rec.spec.k << " m=" << m << " s=" << rec.spec.s << ": "
        << (v.ok ? "pass" : "FAIL (" + v.reason + ")") << '\n';
    (v.ok ? passed : failed) += 1;
  }
  out << Json{{"checked", records.size()}, {"passed", passed}, {"failed", failed}}.dump() << '\n';
  return failed == 0 ? 0 : kExitFailure;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  if (cfg.l.has_value() == cfg.lambda.has_value()) throw UsageError("matrix needs exactly one of --l, --lambda");
  const BinMatrix a = cfg.l ? build_M(*cfg.l) : build_G(*cfg.lambda);
  if (cfg.format == "json") {
    out << Json{{cfg.l ? "l" : "lambda", cfg.l ? *cfg.l : *cfg.lambda}, {"rows", matrix_json(a)}}.dump() << '\n';
  } else {
    out << a.to_string();
  }
  return 0;
}

int cmd_params(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg.k);
  if (!cfg.s) throw UsageError("params needs --s");
  const int s = *cfg.s;
  if (s < 1 || s > max_s(cfg.k)) {
    throw Error(Errc::RangeError, "s must be in 1.." + std::to_string(max_s(cfg.k)) + " for k=" + std::to_string(cfg.k));
  }
  const BinMatrix a = param_matrix(cfg.k, s);
  const auto names = param_names(s);
  std::vector<std::string> labels;
  for (int n : names) labels.push_back(s == 1 ? "b" : "a_" + std::to_string(n));
  const std::string expr = "b_" + std::to_string(s) + "(x)=" + render_b_expression(cfg.k, s);
  if (cfg.format == "json") {
    out << Json{{"k", cfg.k}, {"s", s}, {"params", labels}, {"rows", matrix_json(a)}, {"expression", expr}}.dump()
        << '\n';
    return 0;
  }
  out << "params:";
  for (const auto& label : labels) out << ' ' << label;
  out << '\n';
  for (int r = 0; r < a.rows(); ++r) out << "b_" << r << ": " << row_bits(a, r) << '\n';
  out << expr << '\n';
  return 0;
}

class SelfCheck {
 public:
  SelfCheck(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void expect(bool ok, const std::string& name) {
    if (!ok) {
      err_ << "FAIL " << name << '\n';
      ++failures_;
    }
  }
  void section(const std::string& name, bool ok) {
    out_ << (ok ? "ok   " : "FAIL ") << name << '\n';
    if (!ok) ++failures_;
  }
  int failures() const noexcept { return failures_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  int failures_ = 0;
};

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_k < 1 || cfg.max_k > 6) throw UsageError("--max-k must be in 1..6");
  if (cfg.max_m < 1 || cfg.max_m > 4) throw UsageError("--max-m must be in 1..4");
  if (cfg.oracle != "off" && cfg.oracle != "structural" && cfg.oracle != "full") throw UsageError("bad --oracle");
  SelfCheck check(out, err);
  const auto start = std::chrono::steady_clock::now();

  bool ok = true;
  for (int lambda = 1; lambda <= 7; ++lambda) {
    const BinMatrix g = build_G(lambda);
    ok = ok && g * g == BinMatrix::identity(g.rows());
  }
  check.section("G^2 = I for lambda <= 7", ok);
  ok = true;
  for (int l = 1; l <= 129; l += 2) {
    const BinMatrix a = build_M(l);
    ok = ok && (a * a).is_zero();
  }
  check.section("M_l^2 = 0 for odd l <= 129", ok);
  ok = true;
  for (int s = 1; s <= 64; ++s) {
    const int l = 2 * s - 1;
    const BinMatrix a = build_M(l);
    ok = ok && rank_gf2(a) == s - 1;
    const auto basis = solution_basis(l);
    BinMatrix span(static_cast<int>(basis.size()), l);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::vector<FieldElement> v(static_cast<std::size_t>(l));
      for (int r = basis[b].lo; r < basis[b].hi; ++r) {
        v[static_cast<std::size_t>(r)] = {basis[b].at(r) ? 1u : 0u};
        span.set(static_cast<int>(b), r, basis[b].at(r));
      }
      ok = ok && check_solution_vector(l, v);
    }
    ok = ok && basis.size() == static_cast<std::size_t>(s) && rank_gf2(span) == s;
  }
  check.section("rank M_{2s-1} = s-1 with kernel basis, s <= 64", ok);

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::string> totals;
  BigInt verified = 0;
  std::uint64_t oracle_runs = 0;
  for (int k = cfg.max_k; k >= 1; --k) {
    for (int m = 1; m <= cfg.max_m; ++m) {
      const RingCtx ring = RingCtx::lift(resolve_field(m, m == cfg.m ? cfg.modulus : std::nullopt));
      const std::string tag = "(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
      CodeEnumerator codes(k, ring.field());
      std::uint64_t n = 0;
      bool agree = true, congruent = true, dual = true, oracle = true;
      const bool guarded = (2ull * static_cast<std::uint64_t>(m) << k) <= kBruteForceLog2Guard;
      while (const auto spec = codes.next()) {
        ++n;
        if (spec->s >= 2) agree = agree && build_b_closed_form(ring.field(), k, spec->s, spec->params).comps ==
                                               FieldXM1::from_prefix(ring.field(), k, spec->bvec).comps;
        if (spec->s >= 1) congruent = congruent && check_congruence(k, spec->s, two_part_xm1(*spec, ring.field()));
        if (cfg.oracle == "off") continue;
        const GeneratorPair pair = realize(*spec, ring);
        dual = dual && is_self_dual_structural(pair);
        if (cfg.oracle == "full" && guarded) {
          oracle = oracle && dual_bruteforce(pair, ring) == materialize(pair);
          ++oracle_runs;
        }
      }
      check.section("enumeration size " + tag, BigInt(n) == count(k, m));
      check.section("cross-construction " + tag, agree);
      check.section("congruence " + tag, congruent);
      if (cfg.oracle != "off") check.section("structural self-duality " + tag, dual);
      if (cfg.oracle == "full" && guarded) check.section("brute-force dual " + tag, oracle);
      totals.push_back(std::to_string(n));
      verified += n;
    }
  }

  // Random parameters at the largest (k, m) exercise both b-vector routes.
  bool agree = true;
  const FieldCtx field = resolve_field(cfg.max_m, cfg.max_m == cfg.m ? cfg.modulus : std::nullopt);
  for (int s = 2; s <= max_s(cfg.max_k); ++s) {
    for (int trial = 0; trial < 16; ++trial) {
      std::vector<FieldElement> params(static_cast<std::size_t>(param_length(s)));
      for (auto& p : params) p.bits = static_cast<std::uint32_t>(rng()) & field.mask();
      const FieldXM1 closed = build_b_closed_form(field, cfg.max_k, s, params);
      const FieldXM1 columns = s % 2 ? build_b_case2(field, cfg.max_k, s / 2, params)
                                     : build_b_case3(field, cfg.max_k, s / 2, params);
      agree = agree && closed.comps == columns.comps;
    }
  }
  check.section("random cross-construction (seed " + std::to_string(cfg.seed) + ")", agree);

  std::string joined;
  for (std::size_t i = 0; i < totals.size(); ++i) joined += (i ? "+" : "") + totals[i];
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "codes_verified: " << joined << " = " << verified << '\n';
  if (cfg.oracle == "full") out << "oracle_codes: " << oracle_runs << '\n';
  out << "elapsed_s: " << seconds << '\n';
  if (check.failures() != 0) {
    err << check.failures() << " invariant(s) failed\n";
    return kExitFailure;
  }
  return 0;
}

bool is_usage(Errc code) {
  switch (code) {
    case Errc::ReducibleModulus:
    case Errc::DegreeMismatch:
    case Errc::NotBasicIrreducible:
    case Errc::IndexOutOfRange:
    case Errc::EvenLength:
    case Errc::BadParamLength:
    case Errc::RangeError:
    case Errc::TooLarge:
    case Errc::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-dual cyclic codes of length 2^k over GR(4,m)", "gr4sd"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "log2 of the code length");
    sub->add_option("--m", cfg.m, "degree of the residue field");
    sub->add_option("--modulus", cfg.modulus, "hex bit vector of the field modulus");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* count_cmd = app.add_subcommand("count", "number of self-dual cyclic codes");
  field_opts(count_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "stream codes in canonical order");
  field_opts(enum_cmd);
  enum_cmd->add_option("--s", cfg.s, "restrict to one s (0 = trivial code)");
  enum_cmd->add_option("--limit", cfg.limit, "emit at most N codes");
  enum_cmd->add_option("--offset", cfg.offset, "skip the first N codes");

  auto* verify_cmd = app.add_subcommand("verify", "check codes given as JSON lines or a JSON array");
  verify_cmd->add_option("--m", cfg.m, "degree the --modulus override applies to");
  verify_cmd->add_option("--modulus", cfg.modulus, "hex bit vector of the field modulus");
  verify_cmd->add_option("--oracle", cfg.oracle, "structural or full")->check(CLI::IsMember({"off", "structural", "full"}));
  verify_cmd->add_option("input", cfg.input, "input file (default stdin)");

  auto* matrix_cmd = app.add_subcommand("matrix", "print M_l or G_{2^lambda}");
  matrix_cmd->add_option("--l", cfg.l, "size of M_l");
  matrix_cmd->add_option("--lambda", cfg.lambda, "exponent of G_{2^lambda}");
  matrix_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* params_cmd = app.add_subcommand("params", "linear map from parameters to b_0..b_{s-1}");
  params_cmd->add_option("--k", cfg.k, "log2 of the code length");
  params_cmd->add_option("--s", cfg.s, "1 <= s <= 2^{k-1}-1");
  params_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* self_cmd = app.add_subcommand("selfcheck", "run the invariant suite");
  self_cmd->add_option("--max-k", cfg.max_k, "largest k (default 4)");
  self_cmd->add_option("--max-m", cfg.max_m, "largest m (default 2)");
  self_cmd->add_option("--oracle", cfg.oracle, "off, structural or full")
      ->check(CLI::IsMember({"off", "structural", "full"}));
  self_cmd->add_option("--seed", cfg.seed, "seed for random parameter checks");
  self_cmd->add_option("--m", cfg.m, "degree the --modulus override applies to");
  self_cmd->add_option("--modulus", cfg.modulus, "hex bit vector of the field modulus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) return cmd_count(cfg, out);
    if (*enum_cmd) return cmd_enumerate(cfg, out, err);
    if (*verify_cmd) return cmd_verify(cfg, in, out);
    if (*matrix_cmd) return cmd_matrix(cfg, out);
    if (*params_cmd) return cmd_params(cfg, out);
    if (*self_cmd) return cmd_selfcheck(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return is_usage(e.code()) ? kExitUsage : kExitFailure;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gr4sd
