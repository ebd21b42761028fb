// One PASS/FAIL line per acceptance criterion. OCTOPRIME_ACCEPTANCE_TIER=slow
// adds the slow-tier primes to criteria 3, 4, 7 and 9; 5 and 6 always run.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "octoprime/aut.hpp"
#include "octoprime/catalog.hpp"
#include "octoprime/coset_enum.hpp"
#include "octoprime/errors.hpp"
#include "octoprime/gl2search.hpp"
#include "octoprime/iso.hpp"
#include "octoprime/verify.hpp"
#include "octoprime/zoo.hpp"
#include "support/small_groups.hpp"

using namespace octoprime;
using catalog::CaseLabel;
using catalog::Image;
using catalog::OrderClass;
using zoo::GroupName;
using C = StructureClaim;

namespace {

bool slow_tier()
{
  char const *t = std::getenv("OCTOPRIME_ACCEPTANCE_TIER");
  return t && std::string(t) == "slow";
}

struct Outcome
{
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, std::string const &what)
  {
    if (!ok) {
      pass = false;
      detail << "[x] " << what << "; ";
    }
  }
  void note(std::string const &what) { detail << what << "; "; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int n, std::string const &title, std::function<void(Outcome &)> const &body)
{
  Outcome o;
  auto const t0 = Clock::now();
  try {
    body(o);
  } catch (std::exception const &e) {
    o.pass = false;
    o.detail << "[x] exception: " << e.what() << "; ";
  }
  auto const s = seconds_since(t0);
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << title << "): " << o.detail.str() << "["
            << std::fixed;
  std::cout.precision(1);
  std::cout << s << " s]" << std::endl;
}

PermGroup build(CaseLabel const &l) { return catalog::build_case(l); }

C hol(std::int64_t n) { return C::leaf(GroupName::Hol_C, {n}); }

std::uint64_t complete_aut_order(AutComputation const &c, bool &complete)
{
  auto const rep = count_automorphisms(aut_as_group(c));
  complete = rep.complete;
  return rep.aut_order;
}

std::string pairs_text(std::set<std::pair<std::uint32_t, std::uint32_t>> const &s)
{
  std::string out = "{";
  for (auto const &[x, y] : s)
    out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  return out + "}";
}

} // namespace

int main()
{
  bool const slow = slow_tier();
  if (slow) {
    limits().stored_cap = std::max<std::size_t>(limits().stored_cap, 300000);
    limits().aut_realization_cap = std::max<std::size_t>(limits().aut_realization_cap, 300000);
  }
  std::cout << "tier " << (slow ? "slow" : "fast") << std::endl;

  criterion(1, "order-8 automorphism table", [](Outcome &o) {
    auto const t0 = Clock::now();
    std::map<std::string, std::uint64_t> const want{{"C8", 4}, {"C4xC2", 8}, {"E8", 168}, {"D4", 8}, {"Q2", 24}};
    for (auto const &[name, order] : want) {
      CaseLabel const l{OrderClass::order8, name, Image::direct, "", 0};
      auto const c = compute_automorphisms(build(l));
      o.check(c.aut_order == order, name + " |Aut| = " + std::to_string(c.aut_order));
      auto const id = identify(aut_as_group(c), catalog::expected_aut(l));
      o.check(id.confidence == Confidence::isomorphism_verified, name + " identification " + to_string(id.confidence));
    }
    auto const s = seconds_since(t0);
    o.check(s < 1.0, "runtime " + std::to_string(s) + " s");
    o.note("|Aut| = 4, 8, 168, 8, 24 isomorphism-verified");
  });

  criterion(2, "order-24 factors", [](Outcome &o) {
    auto const t0 = Clock::now();
    auto const cases = catalog::enumerate_cases(3, OrderClass::order8p);
    o.check(cases.size() == 15, std::to_string(cases.size()) + " cases");
    for (auto const &l : cases)
      o.check(build(l).order() == 24, catalog::format_label(l) + " order");
    auto const s4 = C::leaf(GroupName::Sym, {4});
    for (auto const &l : {CaseLabel{OrderClass::order8p, "E8", Image::sylow2, "A4xC2", 3},
                          CaseLabel{OrderClass::order8p, "Q2", Image::sylow2, "SL23", 3},
                          CaseLabel{OrderClass::order8p, "D4", Image::nonnormal, "S4", 3}}) {
      auto const id = identify(aut_as_group(build(l)), s4);
      o.check(id.confidence == Confidence::isomorphism_verified, "Aut(" + l.variant + ") ~ S_4");
    }
    CaseLabel const f{OrderClass::order8p, "E8", Image::sylow2, "Frobenius56", 7};
    auto const c = compute_automorphisms(build(f));
    o.check(c.aut_order == 168, "Frobenius56 |Aut| = " + std::to_string(c.aut_order));
    auto const id = identify(aut_as_group(c), C::leaf(GroupName::Complete168));
    o.check(id.confidence == Confidence::isomorphism_verified, "Aut(Frobenius56) ~ Complete168");
    auto const s = seconds_since(t0);
    o.check(s < 30.0, "runtime " + std::to_string(s) + " s");
    o.note("15 groups of order 24; Aut(A4xC2), Aut(SL(2,3)), Aut(S4) ~ S4; Aut(F56) ~ [168]");
  });

  criterion(3, "C_4 notes family (order 4p^2)", [slow](Outcome &o) {
    auto const t0 = Clock::now();
    std::map<std::uint32_t, std::uint64_t> want{{3, 144}, {5, 800}, {7, 4704}};
    if (slow)
      want.insert({{11, 29040}, {13, 48672}, {17, 147968}, {19, 259920}});
    for (auto const &[p, order] : want) {
      CaseLabel const l{OrderClass::order4p2, "C4", Image::c4, "eq24", p};
      auto const c = compute_automorphisms(build(l));
      o.check(c.aut_order == order, "p=" + std::to_string(p) + " |Aut| = " + std::to_string(c.aut_order));
      bool complete = false;
      complete_aut_order(c, complete);
      o.check(complete, "p=" + std::to_string(p) + " complete");
      if (p <= 7) {
        auto const claim = p % 4 == 3 ? C::leaf(GroupName::H_pn, {p, 2}) : C::wreath(hol(p));
        auto const id = identify(aut_as_group(c), claim);
        o.check(id.confidence == Confidence::isomorphism_verified, "p=" + std::to_string(p) + " ~ " + claim.text());
      }
    }
    auto const s = seconds_since(t0);
    if (!slow)
      o.check(s < 120.0, "runtime " + std::to_string(s) + " s");
    o.note(std::string("p = ") + (slow ? "3..19" : "3,5,7") + " counts, completeness, structure for p <= 7");
  });

  criterion(4, "D_4 full-image family", [slow](Outcome &o) {
    struct Row
    {
      std::uint64_t order;
      bool complete;
      std::uint64_t tower;
    };
    std::map<std::uint32_t, Row> want{{3, {144, true, 0}}, {5, {800, true, 0}}, {7, {2352, false, 4704}},
                                      {11, {9680, true, 0}}};
    if (slow)
      want.insert({{17, {36992, false, 0}}, {19, {51984, true, 0}}, {23, {93104, false, 186208}}});
    for (auto const &[p, row] : want) {
      auto const c = compute_automorphisms(build({OrderClass::order8p2, "D4", Image::full, "", p}));
      auto const ps = "p=" + std::to_string(p);
      o.check(c.aut_order == row.order, ps + " |Aut| = " + std::to_string(c.aut_order));
      o.check(c.aut_order == 8ull * p * p * (p - 1), ps + " 8p^2(p-1)");
      if (p == 17)
        continue;
      bool complete = false;
      auto const tower = complete_aut_order(c, complete);
      o.check(complete == row.complete, ps + " complete = " + (complete ? "true" : "false"));
      if (row.tower)
        o.check(tower == row.tower, ps + " tower " + std::to_string(tower));
    }
    verify::Options opt;
    opt.primes = {13};
    auto const rep = verify::run("tableD", opt);
    bool seen = false;
    for (auto const &r : rep.records) {
      if (r.quantity != "autOrder")
        continue;
      seen = true;
      o.check(r.computed == "16224" && r.expected == "16228" && r.verdict == verify::Verdict::paper_discrepancy,
              "p=13 " + r.computed + " vs " + r.expected + " " + verify::to_string(r.verdict));
    }
    o.check(seen, "p=13 record present");
    o.note(std::string("p = 3,5,7,11") + (slow ? ",17,19,23" : "") + "; p=13 16,224 paper-discrepancy vs 16,228");
  });

  criterion(5, "C_8 family at p = 17", [](Outcome &o) {
    auto const family = catalog::c8_family(17);
    o.check(family.size() == 14, std::to_string(family.size()) + " C_8-family groups");
    for (auto const &l : family) {
      auto const g = build(l);
      o.check(g.order() == 2312, catalog::format_label(l) + " order " + std::to_string(g.order()));
      if (l.image != Image::c8)
        continue;
      auto const row = std::stoi(l.variant.substr(3));
      if (row == 16 || row == 17)
        continue;
      auto const claim = catalog::expected_aut(l);
      auto const c = compute_automorphisms(g);
      if (row == 4) {
        // Hol(C_17 x C_17) is identified by order only.
        auto const id = identify_order(c.aut_order, claim);
        o.check(c.aut_order == 22639104 && id.confidence == Confidence::order_only, "row4 order-only");
        continue;
      }
      if (row == 7)
        o.check(c.aut_order == 147968, "row7 |Aut| = " + std::to_string(c.aut_order));
      auto const id = identify(aut_as_group(c), claim);
      o.check(id.confidence == Confidence::profile_consistent || id.confidence == Confidence::isomorphism_verified,
              l.variant + " " + to_string(id.confidence));
    }
    auto const row15 = build(catalog::parse_label("8p2:C8:row15@p=17"));
    o.check(center_indices(row15).size() == 17, "row15 center order");
    verify::Options opt;
    opt.primes = {17};
    opt.tier = verify::Tier::slow;
    bool seen = false;
    for (auto const &r : verify::run("table5", opt).records) {
      if (r.quantity == "centerOrder") {
        seen = true;
        o.check(r.verdict == verify::Verdict::paper_discrepancy, "row15 center verdict " + verify::to_string(r.verdict));
      }
    }
    o.check(seen, "row15 center record present");
    o.note("14 groups of order 2312; rows 7,10-15 profile-consistent or better, row 4 order-only; row15 center 17");
  });

  criterion(6, "indistinguishable [-2,a] sets", [](Outcome &o) {
    auto const t0 = Clock::now();
    struct Set
    {
      std::vector<int> a;
      std::map<std::uint64_t, std::uint64_t> spectrum;
      std::map<std::uint64_t, std::size_t> classes;
    };
    std::vector<Set> const sets{
      {{2, 8, 9}, {{2, 289}, {4, 578}, {8, 1156}, {17, 288}}, {{2, 1}, {4, 2}, {8, 4}, {17, 36}}},
      {{4, 13},
       {{2, 17}, {4, 578}, {8, 1156}, {17, 288}, {34, 272}},
       {{2, 1}, {4, 2}, {8, 4}, {17, 38}, {34, 4}}},
    };
    for (auto const &set : sets) {
      std::vector<PermGroup> gs;
      for (auto a : set.a) {
        gs.push_back(enumerate_group(parse_presentation(catalog::eq23_relators(-2, 0, 0, a), {{"p", 17}})));
        auto const pr = profile(gs.back());
        auto spectrum = pr.spectrum;
        spectrum.erase(1);
        o.check(spectrum == set.spectrum, "[-2," + std::to_string(a) + "] spectrum");
        std::map<std::uint64_t, std::size_t> classes;
        for (auto const &[ord, sizes] : pr.class_sizes)
          if (ord > 1)
            classes[ord] = sizes.size();
        o.check(classes == set.classes, "[-2," + std::to_string(a) + "] class counts");
      }
      for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
          o.check(!is_isomorphic(gs[i], gs[j]),
                  "[-2," + std::to_string(set.a[i]) + "] vs [-2," + std::to_string(set.a[j]) + "] not isomorphic");
    }
    auto const s = seconds_since(t0);
    o.check(s < 1800.0, "runtime " + std::to_string(s) + " s");
    o.note("printed spectra reproduced; groups pairwise non-isomorphic within each set");
  });

  criterion(7, "<2,3,4> matrix searches", [slow](Outcome &o) {
    using P = std::set<std::pair<std::uint32_t, std::uint32_t>>;
    std::map<std::uint32_t, P> special{
      {7, {{1, 5}, {2, 6}}},
      {23, {{7, 3}, {20, 16}}},
      {31, {{12, 5}, {26, 11}}},
      {47, {{18, 26}, {21, 29}, {20, 14}, {33, 27}}},
      {71, {{7, 20}, {51, 64}}},
      {79, {{19, 29}, {50, 60}}},
    };
    if (slow) {
      special.insert({{167, {{54, 68}, {99, 113}}},
                      {191, {{8, 143}, {42, 100}, {48, 183}, {91, 149}}},
                      {199, {{12, 33}, {166, 187}}},
                      {223, {{57, 43}, {101, 117}, {106, 122}, {180, 166}}},
                      {239, {{31, 131}, {46, 187}, {52, 193}, {108, 208}}},
                      {271, {{114, 19}, {209, 35}, {236, 62}, {252, 157}}},
                      {103, {}},
                      {127, {}},
                      {151, {}},
                      {263, {}}});
    }
    for (auto const &[p, want] : special) {
      P got;
      for (auto const &s : gl2search::search_special(p).solutions)
        got.insert({s.tuple[0], s.tuple[1]});
      o.check(got == want, "p=" + std::to_string(p) + " special " + pairs_text(got) + " vs printed " + pairs_text(want));
    }
    std::map<std::uint32_t, std::size_t> const counts{{7, 4}, {23, 22}, {31, 16}, {47, 23}, {71, 8}, {79, 1}};
    for (auto const &[p, n] : counts) {
      auto const got = gl2search::search_order4q(p, std::numeric_limits<std::size_t>::max()).count();
      // the p = 47 run is marked truncated, so its count is a lower bound
      o.check(p == 47 ? got >= n : got == n, "p=" + std::to_string(p) + " order-4q count " + std::to_string(got) + " vs [" +
                          std::to_string(n) + "]");
    }
    if (slow) {
      std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> const general{
        {103, {{99, 99, 30, 4}, {43, 43, 48, 60}, {62, 21, 18, 41}}},
        {127, {{65, 65, 19, 62}, {78, 29, 123, 49}, {53, 117, 27, 74}}},
        {151, {{133, 79, 15, 18}, {77, 12, 135, 74}, {52, 15, 21, 99}}},
        {263, {{82, 82, 11, 181}, {164, 28, 82, 99}, {191, 16, 54, 72}}},
      };
      for (auto const &[p, tuples] : general) {
        auto const res = gl2search::search_general(p, std::numeric_limits<std::size_t>::max());
        for (auto const &t : tuples)
          o.check(res.contains(t), "p=" + std::to_string(p) + " general tuple found");
      }
    }
    o.note(std::string("special table, order-4q counts") + (slow ? ", general tuples" : "") +
           (slow ? " over the full range" : " for p <= 79"));
  });

  criterion(8, "complete groups of order 216 and 432", [](Outcome &o) {
    auto const t0 = Clock::now();
    for (auto name : {GroupName::Complete216, GroupName::Complete432}) {
      auto const g = zoo::make(name);
      auto const want = zoo::order({name, {}});
      o.check(g.order() == want, zoo::token({name, {}}) + " order " + std::to_string(g.order()));
      auto const c = compute_automorphisms(g);
      o.check(center_indices(g).size() == 1, "trivial center");
      o.check(c.aut_order == want, "|Aut| = |G|");
      o.check(is_isomorphic(aut_as_group(c), g), "Aut ~ G");
    }
    CaseLabel const l{OrderClass::order8p2_cyclic, "E8", Image::sylow2, "V4C9xC2", 3};
    auto const id = identify(aut_as_group(build(l)), C::product({C::leaf(GroupName::Sym, {4}), C::leaf(GroupName::Cyclic, {3})}));
    o.check(id.confidence == Confidence::isomorphism_verified, "Aut((C2xC2)@C9 x C2) ~ S4 x C3");
    auto const s = seconds_since(t0);
    o.check(s < 120.0, "runtime " + std::to_string(s) + " s");
    o.note("orders 216 and 432, both complete; Aut((C2xC2)@C9 x C2) ~ S4 x C3");
  });

  criterion(9, "property suites", [slow](Outcome &o) {
    auto const small = support::groups_up_to_16();
    o.check(small.size() == 42, std::to_string(small.size()) + " groups of order <= 16");
    for (auto const &s : small)
      o.check(count_automorphisms(s.group).aut_order == support::brute_force_aut_count(s.group), s.name + " oracle");
    std::size_t built = 0;
    std::vector<std::uint32_t> primes{3, 5, 7};
    if (slow)
      primes.push_back(17);
    for (auto p : primes) {
      for (auto cls : {OrderClass::order8p, OrderClass::order8p2, OrderClass::order8p2_cyclic, OrderClass::order4p2}) {
        for (auto const &l : catalog::enumerate_cases(p, cls)) {
          auto const g = build(l);
          ++built;
          o.check(support::lagrange_holds(g), catalog::format_label(l) + " Lagrange");
          o.check(catalog::satisfies_relators(g, l), catalog::format_label(l) + " relators");
        }
      }
    }
    for (auto const &s : small)
      o.check(support::lagrange_holds(s.group), s.name + " Lagrange");
    std::vector<std::uint32_t> app2{7, 23, 31, 47, 71, 79};
    if (slow)
      app2.insert(app2.end(), {103, 127, 151, 167, 191, 199, 223, 239, 263, 271});
    for (auto p : app2) {
      for (auto const &s : gl2search::search_special(p, true).solutions) {
        auto const xy = (static_cast<std::uint64_t>(s.tuple[0]) * s.tuple[1]) % p;
        o.check(xy == p - 2, "p=" + std::to_string(p) + " solution with x*y != -2");
      }
    }
    o.note("Aut oracle on all 42 groups of order <= 16; Lagrange and relators on " + std::to_string(built) +
           " catalog builds; x*y = -2 on every special solution");
  });

  criterion(10, "out-of-scope items declared untested", [](Outcome &o) {
    verify::Options opt;
    opt.primes = {11};
    bool seen = false;
    for (auto const &r : verify::run("tableQ", opt).records) {
      if (r.quantity == "complete") {
        seen = true;
        o.check(r.verdict == verify::Verdict::untested, "Q_2 completeness at p=11 " + verify::to_string(r.verdict));
      }
    }
    o.check(seen, "Q_2 completeness record at p=11");
    o.check(!catalog::table_d_presentation(41), "no D_4 presentation asserted at p=41");
    bool not_found = false;
    try {
      catalog::expected_aut({OrderClass::order8p2, "D4", Image::full, "", 41});
    } catch (NotFound const &) {
      not_found = true;
    }
    o.check(not_found, "D_4 structure at p=41 not asserted");
    auto const row4 = catalog::expected_aut(catalog::parse_label("8p2:C8:row4@p=17"));
    o.check(row4.order() == 22639104, "Hol(C17xC17) order " + std::to_string(row4.order()));
    o.check(identify_order(22639104, row4).confidence == Confidence::order_only, "row4 order-only");
    o.note("Q_2 completeness beyond 7, D_4 beyond 17 and Hol(C17xC17) identification are reported untested");
  });

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all passed")
            << std::endl;
  return failures ? 1 : 0;
}
