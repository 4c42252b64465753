#include "planefill/triform.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "planefill/embedding.hpp"

namespace planefill {

TriForm TriForm::monomial(const Field& field, Elem c, int i, int j, int l) {
  TriForm f(field);
  f.add_term({i, j, l}, c);
  return f;
}

TriForm TriForm::variable(const Field& field, Var v) {
  Monomial m{0, 0, 0};
  m[static_cast<int>(v)] = 1;
  return monomial(field, field.one(), m[0], m[1], m[2]);
}

Elem TriForm::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

void TriForm::add_term(const Monomial& m, Elem c) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw std::invalid_argument("negative exponent");
  if (c.v == 0) return;
  const int d = m[0] + m[1] + m[2];
  if (!terms_.empty() && d != degree_) {
    throw std::invalid_argument("monomial of degree " + std::to_string(d) + " added to a form of degree " +
                                std::to_string(degree_));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second.v == 0) terms_.erase(it);
  }
  degree_ = terms_.empty() ? -1 : d;
}

Elem TriForm::eval(const std::array<Elem, 3>& point, const Field& at) const {
  if (terms_.empty()) return at.zero();
  std::array<std::vector<Elem>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].resize(static_cast<std::size_t>(degree_) + 1);
    powers[v][0] = at.one();
    for (int k = 1; k <= degree_; ++k) powers[v][k] = at.mul(powers[v][k - 1], point[v]);
  }
  const bool same = &at == field_;
  const Embedding* emb = same ? nullptr : &embedding(*field_, at);
  Elem acc = at.zero();
  for (const auto& [m, c] : terms_) {
    const Elem cc = same ? c : (*emb)(c);
    acc = at.add(acc, at.mul(cc, at.mul(powers[0][m[0]], at.mul(powers[1][m[1]], powers[2][m[2]]))));
  }
  return acc;
}

TriForm TriForm::scaled(Elem c) const {
  TriForm out(*field_);
  for (const auto& [m, a] : terms_) out.add_term(m, field_->mul(a, c));
  return out;
}

TriForm operator+(const TriForm& a, const TriForm& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("forms over different fields");
  TriForm out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

TriForm operator-(const TriForm& a, const TriForm& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("forms over different fields");
  TriForm out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, a.field_->neg(c));
  return out;
}

TriForm operator*(const TriForm& a, const TriForm& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("forms over different fields");
  TriForm out(*a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, a.field_->mul(ca, cb));
    }
  }
  return out;
}

std::string TriForm::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == field_->one();
    const bool bare = m[0] == 0 && m[1] == 0 && m[2] == 0;
    if (!unit || bare) os << field_->to_string(c);
    bool need_star = !unit;
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (need_star) os << "*";
      os << names[v];
      if (m[v] > 1) os << "^" << m[v];
      need_star = true;
    }
  }
  return os.str();
}

std::string TriForm::serialize() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    out += std::to_string(c.v) + "," + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
           std::to_string(m[2]) + "\n";
  }
  return out;
}

TriForm TriForm::parse(const Field& field, const std::string& text) {
  TriForm f(field);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<long long> vals;
    while (std::getline(ls, tok, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
      }
    }
    if (vals.size() != 4) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected coef,i,j,l");
    if (vals[0] < 0 || static_cast<std::uint64_t>(vals[0]) >= field.size()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": coefficient outside F_" + field.name());
    }
    f.add_term({static_cast<int>(vals[1]), static_cast<int>(vals[2]), static_cast<int>(vals[3])},
               Elem{static_cast<std::uint64_t>(vals[0])});
  }
  return f;
}

TriForm partial(const TriForm& f, Var var) {
  const Field& F = f.field();
  const int k = static_cast<int>(var);
  TriForm out(F);
  for (const auto& [m, c] : f.terms()) {
    if (m[k] == 0) continue;
    const Elem mult = F.from_int(m[k]);
    if (mult.v == 0) continue;
    auto dm = m;
    --dm[k];
    out.add_term(dm, F.mul(c, mult));
  }
  return out;
}

BiPoly restrict_to_line(const TriForm& f, const std::array<Elem, 3>& line) {
  const Field& F = f.field();
  const auto [a, b, c] = line;
  if (a.v == 0 && b.v == 0 && c.v == 0) throw std::invalid_argument("zero line");
  // Each variable as a linear form s*u + t*v in the free variables (u, v).
  std::array<std::array<Elem, 2>, 3> lin{};
  if (b.v != 0) {
    const Elem nb = F.neg(F.inv(b));
    lin = {{{F.one(), F.zero()}, {F.mul(a, nb), F.mul(c, nb)}, {F.zero(), F.one()}}};
  } else if (a.v != 0) {
    const Elem na = F.neg(F.inv(a));
    lin = {{{F.zero(), F.mul(c, na)}, {F.one(), F.zero()}, {F.zero(), F.one()}}};
  } else {
    lin = {{{F.one(), F.zero()}, {F.zero(), F.one()}, {F.zero(), F.zero()}}};
  }
  BiPoly out(F);
  if (f.is_zero()) return out;
  const int d = f.degree();
  // pw[var][k] = dense binary form (s*u + t*v)^k, index = exponent of u.
  std::array<std::vector<std::vector<Elem>>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back({F.one()});
    for (int k = 1; k <= d; ++k) {
      const auto& prev = pw[v].back();
      std::vector<Elem> next(prev.size() + 1, F.zero());
      for (std::size_t i = 0; i < prev.size(); ++i) {
        // prev[i] is the coefficient of u^i v^(k-1-i)
        next[i + 1] = F.add(next[i + 1], F.mul(prev[i], lin[v][0]));
        next[i] = F.add(next[i], F.mul(prev[i], lin[v][1]));
      }
      pw[v].push_back(std::move(next));
    }
  }
  std::vector<Elem> acc(static_cast<std::size_t>(d) + 1, F.zero());
  for (const auto& [m, coef] : f.terms()) {
    const auto& px = pw[0][m[0]];
    const auto& py = pw[1][m[1]];
    const auto& pz = pw[2][m[2]];
    std::vector<Elem> xy(px.size() + py.size() - 1, F.zero());
    for (std::size_t i = 0; i < px.size(); ++i) {
      if (px[i].v == 0) continue;
      for (std::size_t j = 0; j < py.size(); ++j) xy[i + j] = F.add(xy[i + j], F.mul(px[i], py[j]));
    }
    for (std::size_t i = 0; i < xy.size(); ++i) {
      if (xy[i].v == 0) continue;
      const Elem s = F.mul(coef, xy[i]);
      for (std::size_t j = 0; j < pz.size(); ++j) acc[i + j] = F.add(acc[i + j], F.mul(s, pz[j]));
    }
  }
  for (int i = 0; i <= d; ++i) out.add_term(i, d - i, acc[i]);
  return out;
}

BiPoly dehomogenize(const TriForm& f, Var var) {
  const int k = static_cast<int>(var);
  BiPoly out(f.field());
  for (const auto& [m, c] : f.terms()) {
    int e[2];
    int idx = 0;
    for (int v = 0; v < 3; ++v) {
      if (v != k) e[idx++] = m[v];
    }
    out.add_term(e[0], e[1], c);
  }
  return out;
}

}  // namespace planefill
