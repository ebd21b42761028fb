#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "octoprime/aut.hpp"
#include "octoprime/catalog.hpp"
#include "octoprime/coset_enum.hpp"
#include "octoprime/errors.hpp"
#include "octoprime/gl2search.hpp"
#include "octoprime/iso.hpp"
#include "octoprime/parallel.hpp"
#include "octoprime/verify.hpp"
#include "octoprime/zoo.hpp"

using namespace octoprime;
using Json = nlohmann::ordered_json;

namespace {

struct Common
{
  std::string primes;
  std::string tier = "fast";
  std::uint64_t iso_threshold = limits().iso_threshold;
  std::uint64_t count_cap = limits().counting_cap;
  std::string out;
  std::string format = "json";
  std::size_t workers = 1;
  std::uint64_t seed = 1;
};

void add_common(CLI::App *cmd, Common &c, std::string const &default_format)
{
  c.format = default_format;
  cmd->add_option("--primes", c.primes, "comma-separated odd primes");
  cmd->add_option("--tier", c.tier, "fast or slow")->check(CLI::IsMember({"fast", "slow"}));
  cmd->add_option("--iso-threshold", c.iso_threshold, "largest order for explicit isomorphism search");
  cmd->add_option("--count-cap", c.count_cap, "largest group order counted without a stored table");
  cmd->add_option("--out", c.out, "write the report here instead of stdout");
  cmd->add_option("--format", c.format, "json, md or csv")->check(CLI::IsMember({"json", "md", "csv"}));
  cmd->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "seed for randomized choices");
}

void apply(Common const &c)
{
  limits().iso_threshold = c.iso_threshold;
  limits().counting_cap = c.count_cap;
  set_workers(static_cast<int>(c.workers));
}

std::vector<std::uint32_t> parse_primes(std::string const &text)
{
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != item.size() || v < 3 || v > 65535)
      throw InvalidArgument("bad prime '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

void emit(Common const &c, std::string const &text)
{
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f)
    throw InvalidArgument("cannot write " + c.out);
  f << text;
}

// A group by label: catalog labels and Zhang aliases, "zoo:<token>",
// "[w,z]@p=P" for (w,0;0,z) and "(w,x;y,z)@p=P" in the C_8 relator form.
struct Named
{
  PermGroup group;
  std::optional<catalog::CaseLabel> label;
};

Named resolve(std::string text, std::optional<std::uint32_t> p)
{
  if (text.rfind("zoo:", 0) == 0) {
    auto g = zoo::make(zoo::parse_token(text.substr(4)));
    g.set_name(text);
    return {g, std::nullopt};
  }
  if (p && text.find("@p=") == std::string::npos)
    text += "@p=" + std::to_string(*p);
  std::smatch m;
  static std::regex const diag(R"(\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]@p=(\d+))");
  static std::regex const full(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*\)@p=(\d+))");
  std::int64_t w, x = 0, y = 0, z, q;
  if (std::regex_match(text, m, diag)) {
    w = std::stoll(m[1]);
    z = std::stoll(m[2]);
    q = std::stoll(m[3]);
  } else if (std::regex_match(text, m, full)) {
    w = std::stoll(m[1]);
    x = std::stoll(m[2]);
    y = std::stoll(m[3]);
    z = std::stoll(m[4]);
    q = std::stoll(m[5]);
  } else {
    auto const l = catalog::parse_label(text);
    auto g = catalog::build_case(l);
    g.set_name(catalog::format_label(l));
    return {g, l};
  }
  if (q < 3 || !modular::is_prime(static_cast<std::uint64_t>(q)))
    throw InvalidArgument("bad prime in " + text);
  auto g = enumerate_group(parse_presentation(catalog::eq23_relators(w, x, y, z), {{"p", q}}));
  g.set_name(text);
  return {g, std::nullopt};
}

Json profile_json(InvariantProfile const &pr)
{
  Json j;
  j["order"] = pr.order;
  j["centerOrder"] = pr.center_order;
  j["derivedOrder"] = pr.derived_order;
  j["abelianization"] = pr.abelianization;
  Json spec = Json::object();
  for (auto const &[o, n] : pr.spectrum)
    spec[std::to_string(o)] = n;
  j["spectrum"] = spec;
  Json cls = Json::object();
  for (auto const &[o, sizes] : pr.class_sizes)
    cls[std::to_string(o)] = sizes;
  j["classSizes"] = cls;
  return j;
}

int cmd_verify(std::string const &suite, Common const &c)
{
  verify::Options o;
  o.primes = parse_primes(c.primes);
  o.tier = verify::parse_tier(c.tier);
  o.workers = c.workers;
  o.seed = c.seed;
  auto const report = verify::run(suite, o);
  if (c.format == "md")
    emit(c, verify::to_markdown(report));
  else if (c.format == "csv")
    emit(c, verify::to_csv(report));
  else
    emit(c, verify::to_json(report));
  return report.any_refuted() ? 1 : 0;
}

int cmd_group(std::string const &label, std::optional<std::uint32_t> p, std::vector<std::string> actions,
              Common const &c)
{
  if (actions.empty())
    actions = {"order"};
  auto const named = resolve(label, p);
  auto const &g = named.group;
  Json j;
  j["schemaVersion"] = 1;
  j["label"] = g.name();
  AutOptions ao;
  ao.seed = c.seed;
  for (auto const &a : actions) {
    if (a == "order") {
      j["order"] = g.order();
    } else if (a == "profile") {
      j["profile"] = profile_json(profile(g));
    } else if (a == "center") {
      auto const z = center(g);
      Json cz;
      cz["order"] = z.size();
      Json elems = Json::array();
      for (auto const &x : z)
        elems.push_back(x.to_cycles());
      cz["elements"] = elems;
      j["center"] = cz;
    } else if (a == "aut") {
      auto rep = count_automorphisms(g, ao);
      rep.group = g.name();
      if (named.label) {
        try {
          auto const claim = catalog::expected_aut(*named.label);
          if (rep.aut_order <= limits().aut_realization_cap) {
            auto const id = identify(aut_as_group(g, ao), claim, ao.budget);
            rep.confidence = id.confidence;
            if (id.confidence != Confidence::refuted)
              rep.identified_as = claim.text();
          } else {
            rep.confidence = identify_order(rep.aut_order, claim).confidence;
            if (rep.confidence != Confidence::refuted)
              rep.identified_as = claim.text();
          }
        } catch (NotFound const &) {
        }
      } else if (rep.complete) {
        rep.identified_as = g.name();
        rep.confidence =
          rep.order <= limits().iso_threshold ? Confidence::isomorphism_verified : Confidence::profile_consistent;
      }
      auto aj = Json::parse(verify::to_json(rep));
      aj.erase("schemaVersion");
      Json sampled = Json::array();
      for (auto const &t : rep.sampled) {
        Json images = Json::array();
        for (auto const &x : t)
          images.push_back(x.to_cycles());
        sampled.push_back(images);
      }
      Json gens = Json::array();
      for (auto const &x : rep.generators)
        gens.push_back(x.to_cycles());
      j["aut"] = aj;
      j["autGenerators"] = gens;
      j["autSampled"] = sampled;
    } else {
      throw InvalidArgument("unknown action '" + a + "' (order, profile, aut, center)");
    }
  }
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_iso(std::string const &a, std::string const &b, std::optional<std::uint32_t> p, Common const &c)
{
  auto const ga = resolve(a, p).group;
  auto const gb = resolve(b, p).group;
  Json j;
  j["schemaVersion"] = 1;
  j["a"] = ga.name();
  j["b"] = gb.name();
  j["profilesEqual"] = profile(ga) == profile(gb);
  AutOptions ao;
  ao.seed = c.seed;
  auto const aut_a = compute_automorphisms(ga, ao).aut_order;
  auto const aut_b = compute_automorphisms(gb, ao).aut_order;
  j["autOrderA"] = aut_a;
  j["autOrderB"] = aut_b;
  j["autOrdersEqual"] = aut_a == aut_b;
  try {
    j["isomorphic"] = is_isomorphic(ga, gb) ? "true" : "false";
  } catch (BudgetExceeded const &) {
    j["isomorphic"] = "unknown";
  }
  emit(c, j.dump(2) + "\n");
  return 0;
}

std::string tuple_text(std::vector<std::uint32_t> const &t)
{
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

int cmd_search(std::string const &form, std::size_t limit, Common const &c)
{
  auto primes = parse_primes(c.primes);
  if (primes.empty())
    primes = verify::default_primes("app2", verify::parse_tier(c.tier));
  std::vector<gl2search::SearchResult> results;
  for (auto p : primes) {
    if (!modular::is_prime(p))
      throw InvalidArgument(std::to_string(p) + " is not an odd prime");
    if (form == "special" || form == "all")
      results.push_back(gl2search::search_special(p));
    if (form == "order4q" || form == "all")
      results.push_back(gl2search::search_order4q(p, limit));
    if (form == "general" || form == "all")
      results.push_back(gl2search::search_general(p, limit));
  }
  std::ostringstream os;
  if (c.format == "csv") {
    os << "prime,form,tuple,matrixOrder,groupOrder,verified\n";
    for (auto const &r : results)
      for (auto const &s : r.solutions)
        os << r.p << ',' << gl2search::to_string(r.form) << ",\"" << tuple_text(s.tuple) << "\"," << s.matrix_order
           << ',' << s.group_order << ',' << (s.verified ? "true" : "false") << '\n';
  } else if (c.format == "md") {
    os << "| prime | form | tuple | matrixOrder | groupOrder | verified |\n|---|---|---|---|---|---|\n";
    for (auto const &r : results)
      for (auto const &s : r.solutions)
        os << "| " << r.p << " | " << gl2search::to_string(r.form) << " | " << tuple_text(s.tuple) << " | "
           << s.matrix_order << " | " << s.group_order << " | " << (s.verified ? "true" : "false") << " |\n";
  } else {
    Json j;
    j["schemaVersion"] = 1;
    Json arr = Json::array();
    for (auto const &r : results) {
      Json e;
      e["prime"] = r.p;
      e["form"] = gl2search::to_string(r.form);
      e["exhaustive"] = r.exhaustive;
      Json sols = Json::array();
      for (auto const &s : r.solutions)
        sols.push_back({{"tuple", s.tuple},
                        {"matrixOrder", s.matrix_order},
                        {"groupOrder", s.group_order},
                        {"verified", s.verified}});
      e["solutions"] = sols;
      arr.push_back(e);
    }
    j["searches"] = arr;
    os << j.dump(2) << "\n";
  }
  emit(c, os.str());
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"octoprime: automorphism groups of the groups of order 8p and 8p^2"};
  app.require_subcommand(1);

  Common verify_opts, group_opts, iso_opts, search_opts;

  std::string suite;
  auto *v = app.add_subcommand("verify", "run a table-verification suite");
  v->add_option("suite", suite, "table1 table2 table3 table5 table6 tableD tableQ c4-notes app2")
    ->required()
    ->check(CLI::IsMember(verify::suite_names()));
  add_common(v, verify_opts, "json");

  std::string glabel;
  std::optional<std::uint32_t> gp;
  std::vector<std::string> actions;
  auto *g = app.add_subcommand("group", "build a group and report on it");
  g->add_option("label", glabel, "case label, zoo:<name>, [w,z]@p=P or (w,x;y,z)@p=P")->required();
  g->add_option("actions", actions, "order profile aut center");
  g->add_option("--p", gp, "prime, for labels without @p=");
  add_common(g, group_opts, "json");

  std::string ia, ib;
  std::optional<std::uint32_t> ip;
  auto *i = app.add_subcommand("iso", "compare two groups");
  i->add_option("a", ia)->required();
  i->add_option("b", ib)->required();
  i->add_option("--p", ip, "prime, for labels without @p=");
  add_common(i, iso_opts, "json");

  std::string form = "special";
  std::size_t limit = 1000000;
  auto *s = app.add_subcommand("search234", "search GL(2,p) for <2,3,4> representations");
  s->add_option("--form", form, "special, order4q, general or all")
    ->check(CLI::IsMember({"special", "order4q", "general", "all"}));
  s->add_option("--limit", limit, "stop each search after this many tuples");
  add_common(s, search_opts, "csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*v) {
      apply(verify_opts);
      return cmd_verify(suite, verify_opts);
    }
    if (*g) {
      apply(group_opts);
      return cmd_group(glabel, gp, actions, group_opts);
    }
    if (*i) {
      apply(iso_opts);
      return cmd_iso(ia, ib, ip, iso_opts);
    }
    apply(search_opts);
    return cmd_search(form, limit, search_opts);
  } catch (std::exception const &e) {
    std::cerr << "octoprime: " << e.what() << "\n";
    return 2;
  }
}
