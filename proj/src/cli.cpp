#include "planefill/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "planefill/curves.hpp"
#include "planefill/factor.hpp"
#include "planefill/goodk.hpp"
#include "planefill/smoothness.hpp"

namespace planefill::cli {

using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  std::string field;
  std::string curve;
  std::string family = "ckr";
  std::string k_range = "all";
  std::string q_range;
  std::string r_range = "2";
  std::string target;
  unsigned S = 2;
  std::string mode = "full";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  unsigned jobs = 0;
  std::string checkpoint;
  std::uint64_t field_cap = 0;
  unsigned residue_cap = 0;
  bool first = false;
  bool coprime = false;
  bool linear = false;
};

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions o;
  o.seed = cfg.seed;
  return o;
}

json elems_json(const Field& F, const std::vector<Elem>& v) {
  json a = json::array();
  for (Elem e : v) a.push_back(F.coeffs(e).size() == 1 ? json(e.v) : json(F.coeffs(e)));
  return a;
}

json field_json(const Field& F) {
  json j;
  j["name"] = F.name();
  j["q"] = F.size();
  j["modulus"] = F.is_prime_field() ? "" : F.modulus_string();
  return j;
}

std::vector<const Field*> fields_in(const std::string& range) {
  std::vector<const Field*> out;
  for (auto q : parse_range(range)) {
    const auto [p, m] = prime_power(q);
    if (p != 0) out.push_back(&make_field(p, m));
  }
  return out;
}

std::vector<Elem> k_values(const Field& F, const std::string& range) {
  std::vector<Elem> out;
  if (range == "all") {
    for (std::uint64_t k = 0; k < F.size(); ++k) out.push_back(Elem{k});
    return out;
  }
  for (auto k : parse_range(range)) {
    if (k < F.size()) out.push_back(Elem{k});
  }
  return out;
}

CurveSpec family_member(const std::string& family, const Field& F, Elem k, int r) {
  if (family == "ck") return CurveSpec::ck(F, k);
  if (family == "dk") return CurveSpec::dk(F, k);
  if (family == "ckr") return CurveSpec::ckr(F, k, r);
  throw std::invalid_argument("unknown family '" + family + "' (ck, dk, ckr)");
}

// ---- check ----

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.field.empty() || cfg.curve.empty()) throw std::invalid_argument("check needs --field and --curve");
  const Field& F = parse_field(cfg.field);
  const CurveSpec spec = CurveSpec::parse(F, cfg.curve);
  const TriForm f = build_curve(spec);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "check";
  j["field"] = field_json(F);
  j["curve"] = cfg.curve;
  j["degree"] = f.degree();
  j["mode"] = cfg.mode;
  j["plane_filling"] = is_plane_filling(f, F);
  try {
    const UniPoly c = base_point_criterion(spec);
    json cj;
    cj["polynomial"] = c.to_string();
    cj["irreducible"] = c.degree() >= 1 && is_irreducible(c);
    const auto roots = roots_in_field(c, F, cfg.seed);
    cj["roots"] = elems_json(F, roots);
    cj["smooth_at_base_points"] = roots.empty();
    j["criterion"] = cj;
  } catch (const std::invalid_argument&) {
    j["criterion"] = nullptr;
  }
  SingularReport rep;
  if (cfg.mode == "fq") {
    rep = singular_points_up_to(f, 1);
  } else if (cfg.mode == "ext") {
    rep = singular_points_up_to(f, cfg.S);
  } else {
    rep = exact_singular_locus(f, solver_options(cfg));
  }
  rep.curve = cfg.curve;
  if (cfg.linear) {
    const auto line = has_linear_component(f);
    j["linear_component"] = line ? elems_json(F, {(*line)[0], (*line)[1], (*line)[2]}) : json(nullptr);
  }
  j["singular_locus"] = json::parse(rep.to_json());
  j["smooth"] = rep.smooth();

  if (cfg.format == "text") {
    out << "curve " << cfg.curve << " over F_" << F.name() << ", degree " << f.degree() << "\n";
    out << "plane-filling: " << (j["plane_filling"].get<bool>() ? "yes" : "no") << "\n";
    if (!j["criterion"].is_null()) {
      out << "criterion " << j["criterion"]["polynomial"].get<std::string>() << ": "
          << (j["criterion"]["smooth_at_base_points"].get<bool>() ? "no F_q-root" : "has F_q-roots") << "\n";
    }
    out << "method " << to_string(rep.method) << ": " << (rep.smooth() ? "smooth" : "singular") << "\n";
    for (const auto& p : rep.points) {
      out << "  s=" << p.residue_degree << " orbit=" << p.orbit << " [" << p.field->to_string(p.coords[0]) << ":"
          << p.field->to_string(p.coords[1]) << ":" << p.field->to_string(p.coords[2]) << "]\n";
    }
  } else if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    throw std::invalid_argument("check supports --format json or text");
  }
  return rep.smooth() ? 0 : 1;
}

// ---- scan-k ----

struct Verdict {
  json record;
  bool smooth = false;
};

Verdict scan_member(const RunConfig& cfg, const CurveSpec& spec) {
  const TriForm f = build_curve(spec);
  Verdict v;
  json& j = v.record;
  j["k"] = spec.k.v;
  try {
    j["smooth_at_base_points"] = smooth_at_base_points(spec);
  } catch (const std::invalid_argument&) {
    j["smooth_at_base_points"] = nullptr;
  }
  const bool fq_singular = !singular_points_up_to(f, 1).smooth();
  if (cfg.mode == "fq" || fq_singular) {
    v.smooth = !fq_singular;
    j["method"] = "fq-scan";
  } else if (cfg.mode == "ext") {
    v.smooth = singular_points_up_to(f, cfg.S).smooth();
    j["method"] = "enumeration";
  } else {
    try {
      v.smooth = is_smooth(f, solver_options(cfg));
      j["method"] = "exact";
    } catch (const DegenerateLocus&) {
      v.smooth = false;
      j["method"] = "degenerate";
    }
  }
  j["smooth"] = v.smooth;
  return v;
}

std::string config_key(const RunConfig& cfg) {
  return cfg.family + "|" + cfg.k_range + "|" + cfg.mode + "|" + std::to_string(cfg.S) + "|" +
         std::to_string(cfg.seed) + "|" + (cfg.first ? "first" : "all");
}

class Checkpoint {
 public:
  Checkpoint(std::string path, std::string key) : path_(std::move(path)), key_(std::move(key)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    try {
      json j = json::parse(in);
      if (j.value("config", "") == key_) {
        for (auto& [k, v] : j["pairs"].items()) done_[k] = v;
      }
    } catch (const json::exception&) {
      // unreadable checkpoint: start over
    }
  }
  std::optional<json> find(const std::string& id) const {
    std::lock_guard lock(mu_);
    auto it = done_.find(id);
    if (it == done_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& id, const json& rec) {
    if (path_.empty()) return;
    std::lock_guard lock(mu_);
    done_[id] = rec;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = key_;
    j["pairs"] = json::object();
    for (const auto& [k, v] : done_) j["pairs"][k] = v;
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream o(tmp);
      o << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, path_);
  }

 private:
  std::string path_, key_;
  mutable std::mutex mu_;
  std::map<std::string, json> done_;
};

int cmd_scan_k(const RunConfig& cfg, std::ostream& out) {
  if (cfg.q_range.empty()) throw std::invalid_argument("scan-k needs --q");
  struct Pair {
    const Field* F;
    int r;
  };
  std::vector<Pair> pairs;
  const auto rs = parse_range(cfg.r_range);
  for (const Field* F : fields_in(cfg.q_range)) {
    if (cfg.family != "ckr") {
      pairs.push_back({F, 2});
      continue;
    }
    for (auto r : rs) {
      if (r < 2) continue;
      if (cfg.coprime && std::gcd(r, F->characteristic()) != 1) continue;
      pairs.push_back({F, static_cast<int>(r)});
    }
  }
  Checkpoint ckpt(cfg.checkpoint, config_key(cfg));
  std::vector<json> records(pairs.size());
  parallel_for(pairs.size(), cfg.jobs, [&](std::size_t i) {
    const Field& F = *pairs[i].F;
    const int r = pairs[i].r;
    const std::string id = std::to_string(F.size()) + "," + std::to_string(r);
    if (auto rec = ckpt.find(id)) {
      records[i] = *rec;
      return;
    }
    json rec;
    rec["q"] = F.size();
    rec["r"] = r;
    rec["family"] = cfg.family;
    json verdicts = json::array();
    bool exists = false, complete = true;
    try {
      for (Elem k : k_values(F, cfg.k_range)) {
        const Verdict v = scan_member(cfg, family_member(cfg.family, F, k, r));
        verdicts.push_back(v.record);
        if (v.smooth) {
          exists = true;
          if (cfg.first) {
            complete = false;
            break;
          }
        }
      }
      rec["skipped"] = nullptr;
    } catch (const CapExceeded& e) {
      rec["skipped"] = e.what();
    }
    rec["verdicts"] = verdicts;
    rec["exists_smooth_member"] = exists;
    rec["complete"] = complete && rec["skipped"].is_null();
    records[i] = rec;
    ckpt.store(id, rec);
  });
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "scan-k";
  j["family"] = cfg.family;
  j["mode"] = cfg.mode;
  j["k_range"] = cfg.k_range;
  json arr = json::array(), none = json::array();
  for (const auto& rec : records) {
    arr.push_back(rec);
    if (rec["skipped"].is_null() && !rec["verdicts"].empty() && !rec["exists_smooth_member"].get<bool>()) {
      none.push_back({{"r", rec["r"]}, {"q", rec["q"]}});
    }
  }
  j["pairs"] = arr;
  j["pairs_without_smooth_member"] = none;
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "q,r,k,smooth_at_base_points,smooth,method\n";
    for (const auto& rec : records) {
      for (const auto& v : rec["verdicts"]) {
        out << rec["q"] << "," << rec["r"] << "," << v["k"] << "," << v["smooth_at_base_points"].dump() << ","
            << v["smooth"] << "," << v["method"].get<std::string>() << "\n";
      }
    }
  } else {
    for (const auto& rec : records) {
      out << "q=" << rec["q"] << " r=" << rec["r"] << ": ";
      if (!rec["skipped"].is_null()) {
        out << "skipped (" << rec["skipped"].get<std::string>() << ")\n";
      } else {
        out << (rec["exists_smooth_member"].get<bool>() ? "smooth member found" : "no smooth member") << "\n";
      }
    }
  }
  return 0;
}

// ---- verify ----

json point_json(const SingularPoint& p) {
  json j;
  j["residue_degree"] = p.residue_degree;
  json cs = json::array();
  for (Elem c : p.coords) cs.push_back(p.field->coeffs(c));
  j["coords"] = cs;
  return j;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.q_range.empty()) throw std::invalid_argument("verify needs --q");
  const std::string& t = cfg.target;
  if (t != "conj-odd" && t != "conj-even" && t != "fq2-implication" && t != "goodk-claims") {
    throw std::invalid_argument("unknown verify target '" + t + "'");
  }
  std::vector<const Field*> fields;
  for (const Field* F : fields_in(cfg.q_range)) {
    const bool even = F->characteristic() == 2;
    if (t == "conj-odd" && even) continue;
    if (t == "conj-even" && !even) continue;
    fields.push_back(F);
  }
  // one task per (q, k), or per q for goodk-claims
  struct Task {
    const Field* F;
    Elem k;
  };
  std::vector<Task> tasks;
  for (const Field* F : fields) {
    if (t == "goodk-claims") {
      tasks.push_back({F, Elem{0}});
    } else {
      for (Elem k : k_values(*F, "all")) tasks.push_back({F, k});
    }
  }
  std::vector<json> results(tasks.size());
  std::vector<char> ok(tasks.size(), 1);
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
    const Field& F = *tasks[i].F;
    const Elem k = tasks[i].k;
    json r;
    r["q"] = F.size();
    if (t == "goodk-claims") {
      const KGraph G = build_pair_graph(F);
      const ClaimReport c = verify_claims(G);
      r["max_component"] = G.max_component();
      r["claim_a"] = c.claim_a;
      r["claim_b"] = c.claim_b;
      r["claim_c"] = c.claim_c;
      r["claim_d"] = c.claim_d;
      r["chain_step"] = c.chain_step;
      r["degree_at_most_6"] = c.degree_at_most_6;
      r["components_match_bad_k"] = c.components_match_bad_k;
      ok[i] = c.claim_a && c.claim_c && c.claim_d;
    } else {
      r["k"] = k.v;
      const CurveSpec spec = t == "conj-even" ? CurveSpec::dk(F, k) : CurveSpec::ck(F, k);
      const TriForm f = build_curve(spec);
      if (t == "fq2-implication") {
        const Fq2Verdict v = check_fq2_implication(f);
        r["in_range"] = v.in_range;
        r["no_singular_fq_point"] = v.no_singular_fq_point;
        r["no_linear_component"] = v.no_linear_component;
        r["no_singular_fq2_point"] = v.no_singular_fq2_point;
        ok[i] = v.consistent;
        if (!v.consistent) {
          SingularReport two = singular_points_up_to(f, 2);
          json pts = json::array();
          for (const auto& p : two.points) pts.push_back(point_json(p));
          r["singular_points"] = pts;
        }
      } else {
        const bool criterion = smooth_at_base_points(spec);
        bool smooth = false;
        try {
          smooth = is_smooth(f, solver_options(cfg));
        } catch (const DegenerateLocus&) {
          smooth = false;
        }
        r["criterion"] = criterion;
        r["smooth"] = smooth;
        ok[i] = criterion == smooth;
        if (!ok[i] && !smooth) {
          json pts = json::array();
          try {
            for (const auto& p : exact_singular_locus(f, solver_options(cfg)).points) pts.push_back(point_json(p));
          } catch (const std::exception& e) {
            pts = e.what();
          }
          r["singular_points"] = pts;
        }
      }
    }
    results[i] = r;
  });
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";
  j["target"] = t;
  json summary = json::array(), counter = json::array();
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> per_q;  // checked, failed
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& e = per_q[tasks[i].F->size()];
    ++e.first;
    if (!ok[i]) {
      ++e.second;
      counter.push_back(results[i]);
    }
  }
  for (const auto& [q, e] : per_q) summary.push_back({{"q", q}, {"checked", e.first}, {"counterexamples", e.second}});
  const bool consistent = counter.empty();
  j["summary"] = summary;
  j["counterexamples"] = counter;
  if (t == "goodk-claims") j["details"] = results;
  j["consistent"] = consistent;
  if (cfg.format == "text") {
    for (const auto& s : summary) {
      out << "q=" << s["q"] << ": " << s["checked"] << " checked, " << s["counterexamples"] << " counterexamples\n";
    }
    out << (consistent ? "consistent" : "INCONSISTENT") << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return consistent ? 0 : 1;
}

// ---- goodk ----

int cmd_goodk(const RunConfig& cfg, std::ostream& out) {
  if (cfg.q_range.empty()) throw std::invalid_argument("goodk needs --q");
  const auto rs = parse_range(cfg.r_range);
  if (rs.size() != 1) throw std::invalid_argument("goodk takes a single --r");
  const int r = static_cast<int>(rs.front());
  const auto fields = fields_in(cfg.q_range);
  std::vector<json> rows(fields.size());
  std::vector<std::string> csv(fields.size());
  parallel_for(fields.size(), cfg.jobs, [&](std::size_t i) {
    const Field& F = *fields[i];
    json row;
    row["q"] = F.size();
    row["r"] = r;
    const auto good = good_k_values(F, r);
    row["bad"] = F.size() - good.size();
    row["good"] = good.size();
    if (F.size() <= 256) row["good_k"] = elems_json(F, good);
    row["theorem_bound"] = F.size() / 6.0 - 1.0 - 28.0 / 3.0 * std::sqrt(static_cast<double>(F.size()));
    row["theorem_bound_holds"] = theorem_bound_holds(good.size(), F.size());
    if (r == 2) {
      const KGraph G = build_pair_graph(F);
      const ClaimReport c = verify_claims(G);
      json m = json::array();
      for (std::size_t s = 1; s <= std::max<std::size_t>(7, G.max_component()); ++s) {
        m.push_back(s < G.histogram.size() ? G.histogram[s] : 0);
      }
      row["m"] = m;
      row["edges"] = G.edges;
      row["edge_bound_holds"] = c.claim_b;
      row["claims"] = {{"a", c.claim_a}, {"b", c.claim_b}, {"c", c.claim_c}, {"d", c.claim_d}};
      csv[i] = goodk_csv_row(G);
    }
    rows[i] = row;
  });
  if (cfg.format == "csv") {
    if (r != 2) throw std::invalid_argument("csv export covers r = 2 only");
    out << goodk_csv_header() << "\n";
    for (const auto& line : csv) out << line << "\n";
  } else if (cfg.format == "text") {
    for (const auto& row : rows) {
      out << "q=" << row["q"] << " good=" << row["good"] << " bad=" << row["bad"] << "\n";
    }
  } else {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "goodk";
    j["r"] = r;
    j["rows"] = rows;
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

std::vector<std::uint64_t> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::istringstream in(text);
  std::string tok;
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range '" + text + "'");
    }
    if (used != s.size() || s.empty() || s[0] == '-') throw std::invalid_argument("bad range '" + text + "'");
    return static_cast<std::uint64_t>(v);
  };
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    const auto dash = tok.find('-');
    if (dash == std::string::npos) {
      out.push_back(num(tok));
      continue;
    }
    const auto lo = num(tok.substr(0, dash)), hi = num(tok.substr(dash + 1));
    if (hi < lo) throw std::invalid_argument("empty range '" + tok + "'");
    if (hi - lo > 10'000'000) throw std::invalid_argument("range '" + tok + "' too long");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Plane-filling curves over finite fields: construction, smoothness and good-k counts"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for randomised factorization");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", cfg.output, "Write the report to this file");
    sub->add_option("-j,--jobs", cfg.jobs, "Worker threads (0 = all cores)");
    sub->add_option("--field-cap", cfg.field_cap, "Field cardinality cap");
    sub->add_option("--residue-cap", cfg.residue_cap, "Residue-degree cap for the exact solver");
  };
  auto modes = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "fq: F_q-points, ext: points up to F_{q^S}, full: exact")
        ->check(CLI::IsMember({"fq", "ext", "full"}));
    sub->add_option("-S", cfg.S, "Extension bound for --mode ext")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Analyse one curve");
  check->add_option("--field", cfg.field, "Field, e.g. 11, 9 or 3^2")->required();
  check->add_option("--curve", cfg.curve, "tallini:a,b,c | ck:k | dk:k | ckr:k,r | custom:path")->required();
  check->add_flag("--linear", cfg.linear, "Also search for an F_q-linear component");
  modes(check);
  common(check);

  auto* scan = app.add_subcommand("scan-k", "Scan k for each (q, r)");
  scan->add_option("--q", cfg.q_range, "Field sizes, e.g. 2-9 or 3,5,7 (non prime powers skipped)")->required();
  scan->add_option("--r", cfg.r_range, "Values of r for the ckr family");
  scan->add_option("--family", cfg.family, "ck, dk or ckr")->check(CLI::IsMember({"ck", "dk", "ckr"}));
  scan->add_option("--k", cfg.k_range, "k values (packed), or 'all'");
  scan->add_flag("--first", cfg.first, "Stop each (q, r) at the first smooth member");
  scan->add_flag("--coprime", cfg.coprime, "Skip pairs with gcd(r, q) > 1");
  scan->add_option("--checkpoint", cfg.checkpoint, "Resume file, updated after every (q, r)");
  modes(scan);
  common(scan);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification over a q-range");
  verify->add_option("--target", cfg.target, "conj-odd | conj-even | fq2-implication | goodk-claims")->required();
  verify->add_option("--q", cfg.q_range, "Field sizes")->required();
  common(verify);

  auto* goodk = app.add_subcommand("goodk", "Good-k counts, pair graph and bounds");
  goodk->add_option("--q", cfg.q_range, "Field sizes")->required();
  goodk->add_option("--r", cfg.r_range, "r (graph statistics for r = 2 only)");
  common(goodk);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.field_cap) set_field_cardinality_cap(cfg.field_cap);
    if (cfg.residue_cap) set_residue_degree_cap(cfg.residue_cap);
    std::ostringstream buf;
    int code = 0;
    if (*check) {
      code = cmd_check(cfg, buf);
    } else if (*scan) {
      code = cmd_scan_k(cfg, buf);
    } else if (*verify) {
      code = cmd_verify(cfg, buf);
    } else {
      code = cmd_goodk(cfg, buf);
    }
    if (cfg.output.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw std::invalid_argument("cannot write '" + cfg.output + "'");
      f << buf.str();
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace planefill::cli
