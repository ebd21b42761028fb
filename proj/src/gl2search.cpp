#include "octoprime/gl2search.hpp"

#include <algorithm>

#include "octoprime/errors.hpp"
#include "octoprime/presentation.hpp"

namespace octoprime::gl2search {

using modular::Mat2;

namespace {

constexpr char kA22[] = "a^3=b^4=(a,b^2)=a*b*(a*(b^{-1}))^3=1";
constexpr char kA23Short[] = "a^3=(a,b^2)=(a*b)^4*b^2=(a*(b^{-1}))^4*b^{-2}=1";
constexpr char kA23[] =
  "a^3=(a,b^2)=(a*(b^{-1}))^4*(b^{-x})=(a*b)^2*(a^{-1})*(b^{-1})*(a*(b^{-1}))^2*(a^{-1})*b=1";

std::vector<std::string> const kGens{"a", "b"};

bool relators_hold(Presentation const &pres, Mat2 const &a, Mat2 const &b)
{
  std::vector<Mat2> const images{a, b};
  Mat2 const id = Mat2::identity(a.p);
  for (auto const &r : pres.relators) {
    if (!evaluate_word(r, images, id).is_identity())
      return false;
  }
  return true;
}

Presentation const &a22()
{
  static Presentation const pres = parse_presentation(kA22, {}, kGens);
  return pres;
}

Presentation a23(std::uint32_t p)
{
  if (p == 7)
    return parse_presentation(kA23Short, {}, kGens);
  return parse_presentation(kA23, {{"x", static_cast<std::int64_t>(p) - 5}}, kGens);
}

std::uint64_t group_order(std::uint32_t p, Mat2 const &a, Mat2 const &b)
{
  try {
    return modular::mat2_group(p, {a, b}, 50ull * 48 * (p - 1)).size();
  } catch (LimitExceeded const &) {
    return 0;
  }
}

void check_prime(std::uint32_t p)
{
  if (p < 3 || !modular::is_prime(p))
    throw InvalidArgument("gl2search needs an odd prime, got " + std::to_string(p));
}

// Scans rows 0..rows-1; `visit` appends the solutions of one row.
template<class Visit>
std::vector<Solution> scan_rows(std::uint32_t rows, Exec exec, Visit visit)
{
  std::vector<std::vector<Solution>> per_row(rows);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows); ++r)
      visit(static_cast<std::uint32_t>(r), per_row[static_cast<std::size_t>(r)]);
  } else {
    for (std::uint32_t r = 0; r < rows; ++r)
      visit(r, per_row[r]);
  }
  std::vector<Solution> out;
  for (auto &v : per_row)
    std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

} // namespace

std::string to_string(Form f)
{
  switch (f) {
  case Form::special_xy: return "special-xy";
  case Form::general_vxyw: return "general-vxyw";
  case Form::order4q_xy: return "order4q-xy";
  }
  return "?";
}

bool SearchResult::contains(std::vector<std::uint32_t> const &tuple) const
{
  return std::any_of(solutions.begin(), solutions.end(), [&](Solution const &s) { return s.tuple == tuple; });
}

Mat2 matrix_a(std::uint32_t p) { return Mat2(p, -1, 1, -1, 0); }

bool satisfies_a22(Mat2 const &a, Mat2 const &b)
{
  if (!b.invertible())
    return false;
  return relators_hold(a22(), a, b);
}

bool satisfies_a23(Mat2 const &a, Mat2 const &b)
{
  if (!b.invertible())
    return false;
  return relators_hold(a23(a.p), a, b);
}

SearchResult search_special(std::uint32_t p, bool all_pairs, Exec exec)
{
  check_prime(p);
  Mat2 const a = matrix_a(p);
  auto visit = [&](std::uint32_t x, std::vector<Solution> &out) {
    for (std::uint32_t y = 0; y < p; ++y) {
      if (!all_pairs && (static_cast<std::uint64_t>(x) * y + 2) % p != 0)
        continue;
      Mat2 const b(p, 1, x, y, -1);
      if (!satisfies_a22(a, b))
        continue;
      auto const n = group_order(p, a, b);
      if (n == 48)
        out.push_back({{x, y}, b.order(), n, true});
    }
  };
  SearchResult r;
  r.p = p;
  r.form = Form::special_xy;
  r.solutions = scan_rows(p, exec, visit);
  r.exhaustive = true;
  return r;
}

SearchResult search_general(std::uint32_t p, std::size_t limit, Exec exec)
{
  check_prime(p);
  Mat2 const a = matrix_a(p);
  // b^2 commutes with the irreducible a, so b^2 = -I: w = -v and v^2 + x*y = -1.
  auto visit = [&](std::uint32_t v, std::vector<Solution> &out) {
    std::uint32_t const w = (p - v) % p;
    std::uint64_t const rhs = (2ull * p - 1 - static_cast<std::uint64_t>(v) * v % p) % p;
    for (std::uint32_t x = 0; x < p; ++x) {
      std::vector<std::uint32_t> ys;
      if (x == 0) {
        if (rhs == 0) {
          for (std::uint32_t y = 0; y < p; ++y)
            ys.push_back(y);
        }
      } else {
        ys.push_back(static_cast<std::uint32_t>(rhs * modular::pow_mod(x, p - 2, p) % p));
      }
      for (auto y : ys) {
        Mat2 const b(p, v, x, y, w);
        if (!satisfies_a22(a, b))
          continue;
        auto const n = group_order(p, a, b);
        if (n == 48)
          out.push_back({{v, x, y, w}, b.order(), n, true});
      }
    }
  };
  SearchResult r;
  r.p = p;
  r.form = Form::general_vxyw;
  r.solutions = scan_rows(p, exec, visit);
  r.exhaustive = r.solutions.size() <= limit;
  if (r.solutions.size() > limit)
    r.solutions.resize(limit);
  return r;
}

SearchResult search_order4q(std::uint32_t p, std::size_t limit, Exec exec)
{
  check_prime(p);
  Mat2 const a = matrix_a(p);
  std::uint64_t const target = 24ull * (p - 1);
  // b = (1,x;y,-1) squares to (1+xy)I, so b has order 2(p-1) exactly when
  // 1+xy is a primitive root.
  auto visit = [&](std::uint32_t x, std::vector<Solution> &out) {
    if (x == 0)
      return;
    for (std::uint32_t y = 0; y < p; ++y) {
      std::uint32_t const lambda = static_cast<std::uint32_t>((1 + static_cast<std::uint64_t>(x) * y) % p);
      if (lambda == 0 || modular::multiplicative_order(lambda, p) != p - 1)
        continue;
      Mat2 const b(p, 1, x, y, -1);
      if (!satisfies_a23(a, b))
        continue;
      auto const n = group_order(p, a, b);
      if (n == target)
        out.push_back({{x, y}, b.order(), n, true});
    }
  };
  SearchResult r;
  r.p = p;
  r.form = Form::order4q_xy;
  r.solutions = scan_rows(p, exec, visit);
  r.exhaustive = r.solutions.size() <= limit;
  if (r.solutions.size() > limit)
    r.solutions.resize(limit);
  return r;
}

std::array<std::uint32_t, 4> derive_general_from_order4q(std::uint32_t p, std::pair<std::uint32_t, std::uint32_t> xy)
{
  check_prime(p);
  Mat2 const b(p, 1, xy.first, xy.second, -1);
  Mat2 const bq = b.pow((p - 1) / 2);
  Mat2 const a = matrix_a(p);
  if (bq.order() != 4 || !satisfies_a22(a, bq) || group_order(p, a, bq) != 48)
    throw Error("b^q does not satisfy A22 for p=" + std::to_string(p) + " (x,y)=(" + std::to_string(xy.first) + "," +
                std::to_string(xy.second) + ")");
  return bq.m;
}

} // namespace octoprime::gl2search
