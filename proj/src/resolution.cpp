#include "acimult/resolution.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "acimult/checked.hpp"

namespace acimult {

GradedBettiTable::GradedBettiTable(int codim) : codim_(codim) { entries_[{0, 0}] = 1; }

void GradedBettiTable::add(int i, Int j, Int count) {
  if (i < 1) throw BettiError("only steps i >= 1 can be added");
  if (j < 0) throw BettiError("negative internal degree " + std::to_string(j));
  if (count < 1) return;
  entries_[{i, j}] += count;
}

void GradedBettiTable::remove_one(int i, Int j) {
  auto it = entries_.find({i, j});
  if (it == entries_.end())
    throw BettiError("no summand R(-" + std::to_string(j) + ") at step " + std::to_string(i));
  if (--it->second == 0) entries_.erase(it);
}

int GradedBettiTable::pd() const { return entries_.rbegin()->first.first; }

Int GradedBettiTable::at(int i, Int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Int> GradedBettiTable::degrees_at(int i) const {
  std::vector<Int> out;
  for (auto it = entries_.lower_bound({i, 0}); it != entries_.end() && it->first.first == i; ++it)
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first.second);
  return out;
}

Int GradedBettiTable::moment(int k) const {
  Int total = 0;
  for (const auto& [key, beta] : entries_) {
    const Int term = checked_mul(beta, checked_pow(key.second, k));
    total = checked_add(total, key.first % 2 == 0 ? term : -term);
  }
  return total;
}

bool GradedBettiTable::consistent() const {
  for (int k = 0; k < codim_; ++k)
    if (moment(k) != 0) return false;
  return true;
}

std::string GradedBettiTable::to_text() const {
  const int p = pd();
  Int lo = 0, hi = 0;
  for (const auto& [key, beta] : entries_) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<Int> totals(static_cast<std::size_t>(p) + 1, 0);
  for (const auto& [key, beta] : entries_) totals[static_cast<std::size_t>(key.first)] += beta;

  std::size_t width = 1;
  for (const auto& [key, beta] : entries_) width = std::max(width, std::to_string(beta).size());
  for (Int t : totals) width = std::max(width, std::to_string(t).size());
  const std::size_t label = std::max<std::size_t>(6, std::to_string(hi).size() + 1);

  std::ostringstream out;
  out << std::setw(static_cast<int>(label + 1)) << "";
  for (int i = 0; i <= p; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
  out << '\n' << std::setw(static_cast<int>(label)) << "total" << ':';
  for (Int t : totals) out << ' ' << std::setw(static_cast<int>(width)) << t;
  out << '\n';
  for (Int row = lo; row <= hi; ++row) {
    out << std::setw(static_cast<int>(label)) << row << ':';
    for (int i = 0; i <= p; ++i) {
      const Int b = at(i, row + i);
      out << ' ' << std::setw(static_cast<int>(width));
      if (b == 0)
        out << '.';
      else
        out << b;
    }
    out << '\n';
  }
  return out.str();
}

std::string GradedBettiTable::to_json() const {
  nlohmann::json j;
  j["codim"] = codim_;
  j["pd"] = pd();
  auto arr = nlohmann::json::array();
  for (const auto& [key, beta] : entries_) arr.push_back({key.first, key.second, beta});
  j["entries"] = std::move(arr);
  return j.dump();
}

bool ShiftVectors::strictly_increasing() const {
  for (std::size_t i = 1; i < min.size(); ++i)
    if (!(min[i - 1] < min[i])) return false;
  for (std::size_t i = 1; i < max.size(); ++i)
    if (!(max[i - 1] < max[i])) return false;
  return true;
}

namespace {

// For each k = 0..n, the multiset of k-subset sums of v.
std::vector<std::vector<Int>> subset_sums(const std::vector<Int>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<Int>> out(n + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Int s = 0;
    std::size_t bits = 0;
    for (std::size_t t = 0; t < n; ++t)
      if (mask & (std::size_t{1} << t)) {
        s += v[t];
        ++bits;
      }
    out[bits].push_back(s);
  }
  return out;
}

}  // namespace

GradedBettiTable koszul_betti(const CompleteIntersectionDegrees& e) {
  if (e.size() > 20) throw BettiError("Koszul table limited to 20 generators");
  GradedBettiTable b(static_cast<int>(e.size()));
  const auto sums = subset_sums(e.e());
  for (std::size_t k = 1; k < sums.size(); ++k)
    for (Int s : sums[k]) b.add(static_cast<int>(k), s);
  return b;
}

GradedBettiTable gorenstein_betti(const GorensteinDegrees& g) {
  GradedBettiTable b(3);
  for (Int d : g.d()) {
    b.add(1, d);
    b.add(2, g.c() - d);
  }
  b.add(3, g.c());
  return b;
}

GradedBettiTable aci_raw_betti(const AciDegreeData& a) {
  const auto& e = a.e();
  const Int s = a.esum();
  GradedBettiTable b(3);
  for (Int ei : e) b.add(1, ei);
  b.add(1, a.e4());
  // s - (c - d_i) = e4 + d_i
  for (Int d : a.g().d()) b.add(2, a.e4() + d);
  b.add(2, e[0] + e[1]);
  b.add(2, e[0] + e[2]);
  b.add(2, e[1] + e[2]);
  for (Int d : a.g().d()) b.add(3, s - d);
  return b;
}

GradedBettiTable minimalize_aci_betti(const AciDegreeData& a) {
  GradedBettiTable b = aci_raw_betti(a);
  const Int s = a.esum();
  for (int i : classify_case(a).matched) {
    const auto k = static_cast<std::size_t>(i - 1);
    b.remove_one(2, s - a.e()[k]);
    b.remove_one(3, s - a.g().d()[k]);
  }
  return b;
}

GradedBettiTable case_iv_betti(const PfaffianDegreeData& p) {
  const auto& r = p.r();
  const Int rs = p.rsum();
  const Int t = p.t();
  GradedBettiTable b(3);
  for (std::size_t i = 0; i < 3; ++i) b.add(1, rs - r[i]);
  b.add(1, p.e4());
  for (Int ri : r) b.add(2, t - ri);
  for (std::size_t i = 3; i < r.size(); ++i) b.add(3, t + r[i]);
  return b;
}

GradedBettiTable linked_ci_betti(const LinkedCiDegreeData& l) {
  if (l.degenerate())
    throw DegreeError(DegreeErrorKind::Degenerate, 0, "e == d gives J = R");
  const std::size_t n = l.n();
  if (n > 20) throw BettiError("linked table limited to 20 generators");
  const auto esums = subset_sums(l.e());
  const auto dsums = subset_sums(l.d());
  GradedBettiTable b(static_cast<int>(n));
  // P_i = F_i + G_{n-i+1}^*(-alpha) for i < n; the free summands R(-alpha)
  // of F_n and G_0^* cancel, leaving P_n = G_1^*(-alpha).
  for (std::size_t i = 1; i < n; ++i) {
    for (Int s : esums[i]) b.add(static_cast<int>(i), s);
    for (Int s : dsums[n - i + 1]) b.add(static_cast<int>(i), l.alpha() - s);
  }
  for (Int s : dsums[1]) b.add(static_cast<int>(n), l.alpha() - s);
  return b;
}

ShiftVectors linked_ci_closed_form_shifts(const LinkedCiDegreeData& l) {
  const auto& d = l.d();
  const auto& e = l.e();
  const std::size_t n = l.n();
  const Int alpha = l.alpha();
  ShiftVectors s;
  // 1-based i; sums over t >= n-i+1, t <= n-i+1, t <= i, t >= i.
  for (std::size_t i = 1; i < n; ++i) {
    Int top_e = 0, low_d = 0, low_e = 0, top_d = 0;
    for (std::size_t t = n - i + 1; t <= n; ++t) top_e += e[t - 1];
    for (std::size_t t = 1; t <= n - i + 1; ++t) low_d += d[t - 1];
    for (std::size_t t = 1; t <= i; ++t) low_e += e[t - 1];
    for (std::size_t t = i; t <= n; ++t) top_d += d[t - 1];
    s.max.push_back(std::max(top_e, alpha - low_d));
    s.min.push_back(std::min(low_e, alpha - top_d));
  }
  s.max.push_back(alpha - d.front());
  s.min.push_back(alpha - d.back());
  return s;
}

ShiftVectors shift_vectors(const GradedBettiTable& b) {
  ShiftVectors s;
  const int p = b.pd();
  for (int i = 1; i <= p; ++i) {
    const auto degs = b.degrees_at(i);
    if (degs.empty()) throw BettiError("no summands at step " + std::to_string(i));
    s.min.push_back(degs.front());
    s.max.push_back(degs.back());
  }
  return s;
}

Int multiplicity_from_betti(const GradedBettiTable& b) {
  const int h = b.codim();
  for (int k = 0; k < h; ++k) {
    const Int mk = b.moment(k);
    if (mk != 0)
      throw BettiError("inconsistent table: moment " + std::to_string(k) + " is " +
                       std::to_string(mk));
  }
  const Int top = b.moment(h);
  const Int denom = factorial(h);
  if (top % denom != 0)
    throw BettiError("inconsistent table: moment " + std::to_string(top) +
                     " not divisible by " + std::to_string(denom));
  const Int q = top / denom;
  return h % 2 == 0 ? q : -q;
}

}  // namespace acimult
