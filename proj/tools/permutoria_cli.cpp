#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permutoria.h"

namespace {

using json = nlohmann::ordered_json;

struct Ctx {
  pm_context* c = pm_context_new();
  ~Ctx() { pm_context_free(c); }
};

// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 library error.
int report(Ctx& ctx, int status) {
  if (status == PM_OK) return 0;
  std::cerr << "error: " << pm_status_name(status) << ": " << pm_last_error(ctx.c) << "\n";
  return 3;
}

// "10" or "3-10".
std::pair<int, int> parse_range(const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos || dash == 0) {
    int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

std::vector<int> parse_triple(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
  if (v.size() != 3) throw CLI::ValidationError("--dcr", "expects d,c,r");
  return v;
}

// "4x4" or "4".
std::pair<int, int> parse_box(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) {
    int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
}

int max_total_of(const std::string& orders, int given) {
  if (given >= 0) return given;
  return std::stoi(orders.substr(0, orders.find(',')));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutoria: pattern avoidance, generating graphs and tableau involutions"};
  app.require_subcommand(1);
  std::string format = "tsv";

  // count
  auto* count = app.add_subcommand("count", "count avoiders, DA avoiders or extended cells");
  std::string patterns, n_text = "10", dcr;
  bool da = false;
  int workers = 1;
  count->add_option("--patterns", patterns, "comma separated pattern set")->required();
  count->add_option("--n", n_text, "size or range a-b");
  count->add_option("--dcr", dcr, "extended cell d,c,r");
  count->add_flag("--da", da, "count doubly alternating permutations");
  count->add_option("--workers", workers, "threads for plain counts (<=0: all cores)");
  count->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  // series
  auto* series = app.add_subcommand("series", "dump a truncated series");
  std::string formula, orders = "6,4,4", rule = "ext";
  bool brute = false, graph = false;
  int max_total = -1, depth_n = 7, depth_t = 4;
  series->add_option("--formula", formula, "generating function expression");
  series->add_flag("--brute", brute, "brute-force counts of --patterns");
  series->add_flag("--graph", graph, "walk series of the discovered graph of --patterns");
  series->add_option("--patterns", patterns);
  series->add_option("--rule", rule, "standard, ext or ext-alt")->check(CLI::IsMember({"standard", "ext", "ext-alt"}));
  series->add_option("--orders", orders, "x,y,z truncation orders");
  series->add_option("--max-total", max_total, "largest i+j+k dumped (default: x order)");
  series->add_option("--depth-n", depth_n, "discovery depth");
  series->add_option("--depth-t", depth_t, "fingerprint depth");

  // discover
  auto* discover = app.add_subcommand("discover", "discover a generating graph, or compare two");
  std::string equivalent_to;
  std::string graph_format = "dot";
  discover->add_option("--patterns", patterns)->required();
  discover->add_option("--rule", rule)->check(CLI::IsMember({"standard", "ext", "ext-alt"}));
  discover->add_option("--n", depth_n, "discovery depth");
  discover->add_option("--t", depth_t, "fingerprint depth");
  discover->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  discover->add_option("--equivalent-to", equivalent_to, "second pattern set; prints yes or no");

  // biject
  auto* biject = app.add_subcommand("biject", "apply a bijection to one input or a whole domain");
  std::string map, input, tau = "34";
  int biject_n = -1;
  biject->add_option("--map", map, "phi, phi-inv, theta, theta-inv, psi, psi-inv, colpair, colpair-inv, rsk, rsk-inv")->required();
  biject->add_option("--input", input, "one input");
  biject->add_option("--n", biject_n, "domain size for a full table");
  biject->add_option("--tau", tau, "tau for psi, e.g. 34");

  // tableau
  auto* tableau = app.add_subcommand("tableau", "tableau operations");
  std::string op = "show", ttext, other, box, orientation, lambda, mu, nu;
  int letters = -1, bk_i = 1;
  tableau->add_option("--op", op,
                      "show, jdt, rsk, rsk-inv, rec, tau, rotate, bk, xi, evacuation, chi, rho, rho-dual, omega, omega-bk, switch, is-lr, "
                      "verify-diagram, lr-coefficient");
  tableau->add_option("--tableau", ttext, "rows like .,1,2/1,3 or tableau JSON");
  tableau->add_option("--with", other, "second tableau for switch and rsk-inv");
  tableau->add_option("--letters", letters);
  tableau->add_option("--box", box, "shape bounding box RxC");
  tableau->add_option("--orientation", orientation, "lr or anti-lr")->check(CLI::IsMember({"lr", "anti-lr"}));
  tableau->add_option("--i", bk_i, "Bender-Knuth index");
  tableau->add_option("--lambda", lambda);
  tableau->add_option("--mu", mu);
  tableau->add_option("--nu", nu);

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  bool list = false, all = false;
  std::string vbox = "4x4", vformat = "text";
  int vletters = 4, vn = -1;
  std::uint64_t seed = 0;
  verify->add_option("suite", suites, "suite names");
  verify->add_flag("--list", list, "list suites");
  verify->add_flag("--all", all, "run every suite");
  verify->add_option("--box", vbox, "tableau universe box RxC");
  verify->add_option("--letters", vletters);
  verify->add_option("--n", vn, "size override");
  verify->add_option("--seed", seed);
  verify->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  app.add_subcommand("limits", "print the effective size caps");

  CLI11_PARSE(app, argc, argv);
  Ctx ctx;
  const char* out = nullptr;

  try {
    if (app.got_subcommand("limits")) {
      int st = pm_limits(ctx.c, &out);
      if (st) return report(ctx, st);
      std::cout << out << "\n";
      return 0;
    }

    if (count->parsed()) {
      if (!dcr.empty()) {
        auto v = parse_triple(dcr);
        std::int64_t c = 0;
        if (int st = pm_count_extended(ctx.c, patterns.c_str(), v[0], v[1], v[2], &c)) return report(ctx, st);
        if (format == "json") std::cout << json{{"patterns", patterns}, {"dcr", v}, {"count", c}}.dump() << "\n";
        else std::cout << c << "\n";
        return 0;
      }
      auto [lo, hi] = parse_range(n_text);
      json rows = json::array();
      for (int n = lo; n <= hi; ++n) {
        std::int64_t c = 0;
        if (int st = pm_count(ctx.c, patterns.c_str(), n, da, workers, &c)) return report(ctx, st);
        if (format == "json") rows.push_back({{"n", n}, {"count", c}});
        else if (lo == hi) std::cout << c << "\n";
        else std::cout << n << "\t" << c << "\n";
      }
      if (format == "json") std::cout << json{{"patterns", patterns}, {"da", da}, {"counts", rows}}.dump() << "\n";
      return 0;
    }

    if (series->parsed()) {
      const int mt = max_total_of(orders, max_total);
      int st = PM_OK;
      if (!formula.empty()) st = pm_series_formula(ctx.c, formula.c_str(), orders.c_str(), mt, &out);
      else if (brute) st = pm_series_brute(ctx.c, patterns.c_str(), rule.c_str(), orders.c_str(), mt, &out);
      else if (graph) st = pm_series_graph(ctx.c, patterns.c_str(), rule.c_str(), depth_n, depth_t, orders.c_str(), mt, &out);
      else throw CLI::ValidationError("series", "give --formula, --brute or --graph");
      if (st) return report(ctx, st);
      std::cout << out;
      return 0;
    }

    if (discover->parsed()) {
      if (!equivalent_to.empty()) {
        int eq = 0;
        if (int st = pm_graph_equivalent(ctx.c, patterns.c_str(), equivalent_to.c_str(), depth_n, depth_t, &eq)) return report(ctx, st);
        std::cout << (eq ? "yes" : "no") << "\n";
        return 0;
      }
      if (int st = pm_discover(ctx.c, patterns.c_str(), rule.c_str(), depth_n, depth_t, graph_format.c_str(), &out)) return report(ctx, st);
      std::cout << out;
      if (graph_format == "json") std::cout << "\n";
      return 0;
    }

    if (biject->parsed()) {
      int st = PM_OK;
      if (!input.empty()) st = pm_biject(ctx.c, map.c_str(), input.c_str(), tau.c_str(), &out);
      else if (biject_n >= 0) st = pm_biject_table(ctx.c, map.c_str(), biject_n, tau.c_str(), &out);
      else throw CLI::ValidationError("biject", "give --input or --n");
      if (st) return report(ctx, st);
      std::cout << out;
      return 0;
    }

    if (tableau->parsed()) {
      if (op == "lr-coefficient") {
        std::int64_t c = 0;
        if (int st = pm_lr_coefficient(ctx.c, lambda.c_str(), mu.c_str(), nu.c_str(), &c)) return report(ctx, st);
        std::cout << c << "\n";
        return 0;
      }
      if (ttext.empty()) throw CLI::ValidationError("tableau", "--tableau is required");
      json opts = json::object();
      if (letters >= 0) opts["letters"] = letters;
      if (!box.empty()) {
        auto [r, c] = parse_box(box);
        opts["box"] = {r, c};
      }
      if (!orientation.empty()) opts["orientation"] = orientation;
      if (!other.empty()) opts["other"] = other;
      opts["i"] = bk_i;
      if (int st = pm_tableau(ctx.c, op.c_str(), ttext.c_str(), opts.dump().c_str(), &out)) return report(ctx, st);
      std::cout << out << "\n";
      return 0;
    }

    if (verify->parsed()) {
      if (list || (suites.empty() && !all)) {
        if (int st = pm_suites(ctx.c, &out)) return report(ctx, st);
        for (const auto& s : json::parse(out))
          std::cout << s["name"].get<std::string>() << "\t" << s["title"].get<std::string>() << (s["conjecture"].get<bool>() ? " (conjecture)" : "")
                    << "\n";
        return 0;
      }
      if (all) {
        if (int st = pm_suites(ctx.c, &out)) return report(ctx, st);
        suites.clear();
        for (const auto& s : json::parse(out)) suites.push_back(s["name"].get<std::string>());
      }
      auto [r, c] = parse_box(vbox);
      json opts = {{"box", {r, c}}, {"letters", vletters}, {"n", vn}, {"seed", seed}};
      const std::string os = opts.dump();
      bool failed = false;
      json reports = json::array();
      for (const std::string& s : suites) {
        int hard = 0;
        if (int st = pm_verify(ctx.c, s.c_str(), os.c_str(), vformat.c_str(), &out, &hard)) return report(ctx, st);
        if (vformat == "json") reports.push_back(json::parse(out));
        else std::cout << out;
        failed = failed || hard;
      }
      if (vformat == "json") std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
      return failed ? 1 : 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
