#include "motivic/motivic_class.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace motivic {

SymMonomial SymMonomial::generator(int i, int power) {
  if (i < 1) throw std::invalid_argument("S_i needs i >= 1");
  SymMonomial m;
  if (power != 0) {
    m.e_.assign(static_cast<std::size_t>(i), 0);
    m.e_[i - 1] = power;
  }
  return m;
}

int SymMonomial::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) w += static_cast<int>(i + 1) * e_[i];
  return w;
}

SymMonomial SymMonomial::operator*(const SymMonomial& o) const {
  SymMonomial r;
  r.e_.assign(std::max(e_.size(), o.e_.size()), 0);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += e_[i];
  for (std::size_t i = 0; i < o.e_.size(); ++i) r.e_[i] += o.e_[i];
  while (!r.e_.empty() && r.e_.back() == 0) r.e_.pop_back();
  return r;
}

std::string SymMonomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << '*';
    os << "S_" << (i + 1);
    if (e_[i] != 1) os << '^' << e_[i];
    first = false;
  }
  return os.str();
}

MotivicClass::MotivicClass(long c) : MotivicClass(LaurentL(c)) {}
MotivicClass::MotivicClass(const Integer& c) : MotivicClass(LaurentL(c)) {}
MotivicClass::MotivicClass(const LaurentL& c) {
  if (!c.is_zero()) terms_.emplace(SymMonomial{}, c);
}

MotivicClass MotivicClass::S(int i, int power) {
  if (i == 0) return MotivicClass(1);
  return term(SymMonomial::generator(i, power), LaurentL(1));
}

MotivicClass MotivicClass::L(int k) { return MotivicClass(lefschetz(k)); }

MotivicClass MotivicClass::term(const SymMonomial& m, const LaurentL& c) {
  MotivicClass r;
  r.add_term(m, c);
  return r;
}

void MotivicClass::add_term(const SymMonomial& m, const LaurentL& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MotivicClass::max_generator() const {
  int g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, m.max_generator());
  return g;
}

bool MotivicClass::is_pure_L() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_one(); });
}

LaurentL MotivicClass::to_laurent() const {
  if (!is_pure_L())
    throw SymbolicEvaluationError("class " + str() + " involves symmetric-power generators; specialize the model first");
  return terms_.empty() ? LaurentL() : terms_.begin()->second;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MotivicClass operator-(MotivicClass a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  MotivicClass r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MotivicClass MotivicClass::pow(unsigned n) const {
  MotivicClass r(1), base = *this;
  while (n) {
    if (n & 1U) r *= base;
    base *= base;
    n >>= 1U;
  }
  return r;
}

std::string MotivicClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest weight first, then highest generator, then by L-exponent.
  std::vector<const Map::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    const auto kx = std::make_pair(x->first.weight(), x->first.max_generator());
    const auto ky = std::make_pair(y->first.weight(), y->first.max_generator());
    return kx > ky;
  });
  for (const auto* entry : order) {
    const auto& [mono, coeff] = *entry;
    for (auto ct = coeff.terms().rbegin(); ct != coeff.terms().rend(); ++ct) {
      const auto& [k, c] = *ct;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      std::vector<std::string> factors;
      const Integer mag = abs(c);
      if (mag != 1) factors.push_back(mag.get_str());
      if (k == 1) factors.push_back("L");
      else if (k != 0) factors.push_back("L^" + std::to_string(k));
      if (!mono.is_one()) factors.push_back(mono.str());
      if (factors.empty()) factors.push_back("1");
      for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
      first = false;
    }
  }
  return os.str();
}

long dimension(const MotivicClass& c, int d) {
  long best = kNegInfDim;
  for (const auto& [mono, coeff] : c.terms()) {
    long dim = static_cast<long>(d) * mono.weight() + *coeff.top();
    best = std::max(best, dim);
  }
  return best;
}

MotivicClass sym_product(const std::vector<int>& profile) {
  MotivicClass r(1);
  for (int m : profile) r *= MotivicClass::S(m);
  return r;
}

}  // namespace motivic
