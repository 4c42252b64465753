#include "planefill/curves.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace planefill {

namespace {

TriForm mono(const Field& F, Elem c, int i, int j, int l) { return TriForm::monomial(F, c, i, j, l); }

void check_param(const Field& F, Elem e, const char* name) {
  if (!F.contains(e)) throw std::invalid_argument(std::string("parameter ") + name + " outside F_" + F.name());
}

std::vector<std::uint64_t> parse_uints(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad curve parameter '" + tok + "'");
    }
    if (used != tok.size() || tok.empty() || tok[0] == '-') {
      throw std::invalid_argument("bad curve parameter '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

CurveSpec CurveSpec::tallini(const Field& F, Elem a, Elem b, Elem c) {
  CurveSpec s;
  s.field = &F;
  s.family = Family::tallini;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}

CurveSpec CurveSpec::ck(const Field& F, Elem k) {
  CurveSpec s;
  s.field = &F;
  s.family = Family::ck;
  s.k = k;
  s.r = 2;
  return s;
}

CurveSpec CurveSpec::dk(const Field& F, Elem k) {
  CurveSpec s = ck(F, k);
  s.family = Family::dk;
  return s;
}

CurveSpec CurveSpec::ckr(const Field& F, Elem k, int r) {
  CurveSpec s = ck(F, k);
  s.family = Family::ckr;
  s.r = r;
  return s;
}

CurveSpec CurveSpec::from_forms(const Field& F, TriForm q1, TriForm q2, TriForm q3) {
  CurveSpec s;
  s.field = &F;
  s.family = Family::custom;
  s.custom = {std::move(q1), std::move(q2), std::move(q3)};
  return s;
}

CurveSpec CurveSpec::parse(const Field& F, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("curve spec '" + text + "' lacks a family prefix");
  const std::string tag = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (tag == "custom") {
    std::ifstream in(rest);
    if (!in) throw std::invalid_argument("cannot open custom curve file '" + rest + "'");
    std::vector<std::string> blocks(1);
    std::string line;
    while (std::getline(in, line)) {
      if (line == "--" || line == "--\r") {
        blocks.emplace_back();
      } else {
        blocks.back() += line + "\n";
      }
    }
    if (blocks.size() != 3) throw std::invalid_argument("custom curve file must hold exactly three forms");
    return from_forms(F, TriForm::parse(F, blocks[0]), TriForm::parse(F, blocks[1]), TriForm::parse(F, blocks[2]));
  }
  const auto v = parse_uints(rest);
  auto elem = [&](std::uint64_t x) {
    if (x >= F.size()) throw std::invalid_argument("curve parameter " + std::to_string(x) + " outside F_" + F.name());
    return Elem{x};
  };
  if (tag == "tallini" && v.size() == 3) return tallini(F, elem(v[0]), elem(v[1]), elem(v[2]));
  if (tag == "ck" && v.size() == 1) return ck(F, elem(v[0]));
  if (tag == "dk" && v.size() == 1) return dk(F, elem(v[0]));
  if (tag == "ckr" && v.size() == 2) {
    if (v[1] < 2 || v[1] > 1000) throw std::invalid_argument("ckr needs 2 <= r <= 1000");
    return ckr(F, elem(v[0]), static_cast<int>(v[1]));
  }
  throw std::invalid_argument("malformed curve spec '" + text + "'");
}

std::string CurveSpec::to_string() const {
  switch (family) {
    case Family::tallini:
      return "tallini:" + std::to_string(a.v) + "," + std::to_string(b.v) + "," + std::to_string(c.v);
    case Family::ck:
      return "ck:" + std::to_string(k.v);
    case Family::dk:
      return "dk:" + std::to_string(k.v);
    case Family::ckr:
      return "ckr:" + std::to_string(k.v) + "," + std::to_string(r);
    case Family::custom:
      return "custom";
  }
  return "custom";
}

std::array<TriForm, 3> filling_generators(const Field& F) {
  const auto q = static_cast<int>(F.size());
  const Elem one = F.one();
  const Elem m1 = F.neg(one);
  return {mono(F, one, q, 1, 0) + mono(F, m1, 1, q, 0), mono(F, one, 0, q, 1) + mono(F, m1, 0, 1, q),
          mono(F, one, 1, 0, q) + mono(F, m1, q, 0, 1)};
}

TriForm build_curve(const CurveSpec& spec) {
  if (spec.field == nullptr) throw std::invalid_argument("curve spec without a field");
  const Field& F = *spec.field;
  if (F.size() > 4096) throw std::invalid_argument("curve degree too large for F_" + F.name());
  const auto g = filling_generators(F);
  const Elem one = F.one();
  TriForm q1(F), q2(F), q3(F);
  switch (spec.family) {
    case Family::tallini:
      check_param(F, spec.a, "a");
      check_param(F, spec.b, "b");
      check_param(F, spec.c, "c");
      q1 = mono(F, spec.a, 1, 0, 0) + mono(F, spec.b, 0, 1, 0) + mono(F, spec.c, 0, 0, 1);
      q2 = mono(F, one, 0, 1, 0);
      q3 = mono(F, one, 0, 0, 1);
      break;
    case Family::ck:
    case Family::ckr: {
      check_param(F, spec.k, "k");
      const int r = spec.family == Family::ck ? 2 : spec.r;
      if (r < 2) throw std::invalid_argument("ckr needs r >= 2");
      q1 = mono(F, one, r, 0, 0);
      q2 = mono(F, one, 0, r, 0);
      q3 = mono(F, one, 0, 0, r) + mono(F, spec.k, r, 0, 0);
      break;
    }
    case Family::dk:
      check_param(F, spec.k, "k");
      q1 = mono(F, one, 2, 0, 0);
      q2 = mono(F, one, 0, 2, 0);
      q3 = mono(F, one, 0, 0, 2) + mono(F, spec.k, 1, 1, 0);
      break;
    case Family::custom: {
      for (const auto& q : spec.custom) {
        if (!q) throw std::invalid_argument("custom spec needs three forms");
        if (&q->field() != &F) throw std::invalid_argument("custom form over a different field");
      }
      int d = -1;
      for (const auto& q : spec.custom) {
        if (q->is_zero()) continue;
        if (d >= 0 && q->degree() != d) throw std::invalid_argument("custom forms must share one degree");
        d = q->degree();
      }
      q1 = *spec.custom[0];
      q2 = *spec.custom[1];
      q3 = *spec.custom[2];
      break;
    }
  }
  return q1 * g[0] + q2 * g[1] + q3 * g[2];
}

ProjPoint ProjPoint::normalized(const Field& F, std::array<Elem, 3> coords) {
  int lead = 0;
  while (lead < 3 && coords[lead].v == 0) ++lead;
  if (lead == 3) throw std::invalid_argument("(0,0,0) is not a projective point");
  if (coords[lead] != F.one()) {
    const Elem s = F.inv(coords[lead]);
    for (auto& c : coords) c = F.mul(c, s);
  }
  return ProjPoint{&F, coords};
}

std::vector<ProjPoint> enumerate_proj_points(const Field& F) {
  const std::uint64_t q = F.size();
  const unsigned __int128 total = static_cast<unsigned __int128>(q) * q + q + 1;
  if (total > field_cardinality_cap() * static_cast<unsigned __int128>(q + 2)) {
    throw CapExceeded("P^2(F_" + F.name() + ") is too large to enumerate");
  }
  std::vector<ProjPoint> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) out.push_back({&F, {F.one(), Elem{a}, Elem{b}}});
  }
  for (std::uint64_t c = 0; c < q; ++c) out.push_back({&F, {F.zero(), F.one(), Elem{c}}});
  out.push_back({&F, {F.zero(), F.zero(), F.one()}});
  return out;
}

bool is_plane_filling(const TriForm& f, const Field& F) {
  for (const auto& pt : enumerate_proj_points(F)) {
    if (f.eval(pt.coords, F).v != 0) return false;
  }
  return true;
}

}  // namespace planefill
