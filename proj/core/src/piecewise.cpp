#include <algorithm>
#include <stdexcept>

#include "modcard/tables.hpp"

namespace modcard {

long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

long long ceil_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    std::size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad rational '" + s + "'");
    return v;
  };
  try {
    if (slash == std::string::npos) return Rational(parse_int(s));
    long long den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(parse_int(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational PiecewiseLinearFn::raw(const Rational& x) const {
  if (breakpoints.empty()) throw std::logic_error("piecewise function without breakpoints");
  const auto& first = breakpoints.front();
  const auto& last = breakpoints.back();
  if (x <= first.x) return first.y + left_slope * (x - first.x);
  if (x >= last.x) return last.y + right_slope * (x - last.x);
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x,
                             [](const Rational& v, const Breakpoint& b) { return v < b.x; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) / (hi.x - lo.x) * (x - lo.x);
}

Rational PiecewiseLinearFn::value(const Rational& x) const {
  Rational r = raw(x);
  return mode == EvalMode::Ceiling ? Rational(ceil_of(r)) : r;
}

long long PiecewiseLinearFn::at(long long x) const {
  Rational v = value(Rational(x));
  if (v.denominator() != 1) throw std::logic_error("piecewise function is not integral at " + std::to_string(x));
  return v.numerator();
}

int PiecewiseLinearFn::segment_count() const {
  return std::max<int>(1, static_cast<int>(breakpoints.size()) - 1);
}

std::pair<long long, long long> PiecewiseLinearFn::segment_domain(int s, long long dom_lo, long long dom_hi) const {
  if (s < 0 || s >= segment_count()) throw std::out_of_range("segment index");
  const auto& a = breakpoints[s];
  const auto& b = breakpoints.size() == 1 ? breakpoints[0] : breakpoints[s + 1];
  long long lo = ceil_of(a.x), hi = floor_of(b.x);
  if (s == 0) lo = std::min(lo, dom_lo);  // extensions belong to the outer segments
  if (s == segment_count() - 1) hi = std::max(hi, dom_hi);
  return {std::max(lo, dom_lo), std::min(hi, dom_hi)};
}

bool PiecewiseLinearFn::check_convex() const {
  Rational prev = left_slope;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Rational s = (breakpoints[i + 1].y - breakpoints[i].y) / (breakpoints[i + 1].x - breakpoints[i].x);
    if (s < prev) return false;
    prev = s;
  }
  return right_slope >= prev;
}

PiecewiseLinearFn compress_step_table(const StepTable& t) {
  if (t.kind != TableKind::Deletion) throw std::invalid_argument("compression expects a deletion table");
  if (t.values.empty()) throw std::invalid_argument("empty table");
  PiecewiseLinearFn f;
  f.mode = EvalMode::Exact;
  const int len = static_cast<int>(t.values.size());
  for (int s = 0; s < len;) {
    int e = s;
    while (e + 1 < len && t.values[e + 1] == t.values[s]) ++e;
    f.breakpoints.push_back({Rational(s), Rational(t.values[s])});
    if (e > s) f.breakpoints.push_back({Rational(e), Rational(t.values[s])});
    s = e + 1;
  }
  f.convex = f.check_convex();
  return f;
}

StepTable table_from_piecewise(const PiecewiseLinearFn& f, int n) {
  StepTable t;
  t.kind = TableKind::Deletion;
  t.host_size = n;
  for (int x = 0; x <= n; ++x) t.values.push_back(static_cast<int>(f.at(x)));
  return t;
}

}  // namespace modcard
