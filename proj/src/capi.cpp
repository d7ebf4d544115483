#include "permutoria.h"

#include <functional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "permutoria/bijections.hpp"
#include "permutoria/enumerate.hpp"
#include "permutoria/gengraph.hpp"
#include "permutoria/involutions.hpp"
#include "permutoria/suites.hpp"
#include "permutoria/tableau.hpp"

struct pm_context {
  std::string error;
  std::string result;
};

namespace {

using namespace permutoria;
using json = nlohmann::ordered_json;

int guarded(pm_context* ctx, const std::function<void()>& body) {
  if (!ctx) return PM_INVALID_ARGUMENT;
  ctx->error.clear();
  try {
    body();
    return PM_OK;
  } catch (const Error& e) {
    ctx->error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return PM_INTERNAL;
  }
}

std::string str_arg(const char* s, const char* what) {
  if (!s) fail(Errc::invalid_argument, std::string(what) + " is missing");
  return s;
}

template <class T>
T& out_arg(T* p) {
  if (!p) fail(Errc::invalid_argument, "output pointer is null");
  return *p;
}

const char* publish(pm_context* ctx, std::string s) {
  ctx->result = std::move(s);
  return ctx->result.c_str();
}

std::string syt_str(const StandardTableau& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += '/';
    for (std::size_t j = 0; j < t[i].size(); ++j) s += (j ? "," : "") + std::to_string(t[i][j]);
  }
  return s;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> v;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad integer '" + cur + "'");
    }
    cur.clear();
  };
  const bool has_sep = text.find(',') != std::string_view::npos;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      flush();
    } else {
      cur.push_back(ch);
      if (!has_sep) flush();
    }
  }
  flush();
  return v;
}

StandardTableau parse_syt(std::string_view text) {
  StandardTableau t;
  std::string row;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, row, '/')) t.push_back(parse_ints(row));
  if (!is_standard(t)) fail(Errc::not_a_tableau, "not a standard tableau: '" + std::string(text) + "'");
  return t;
}

std::string word_str(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

std::vector<int> tau_arg(const char* tau) { return parse_tau(tau ? tau : "34"); }

std::string map_one(const std::string& map, const std::string& in, const std::vector<int>& tau) {
  if (map == "phi") return phi(Permutation::parse(in)).str();
  if (map == "phi-inv") return phi_inv(Permutation::parse(in)).str();
  if (map == "theta") return theta(Permutation::parse(in));
  if (map == "theta-inv") return theta_inv(in).str();
  if (map == "psi") return psi(Permutation::parse(in), tau).str();
  if (map == "psi-inv") return psi_inv(Permutation::parse(in), tau).str();
  if (map == "colpair") return word_str(colpair(parse_syt(in)));
  if (map == "colpair-inv") return syt_str(colpair_inv(parse_ints(in)));
  if (map == "rsk") {
    auto [p, q] = rsk_permutation(Permutation::parse(in));
    return syt_str(p) + "\t" + syt_str(q);
  }
  if (map == "rsk-inv") {
    auto semi = in.find(';');
    if (semi == std::string::npos) fail(Errc::parse_error, "rsk-inv expects 'P;Q'");
    return rsk_permutation_inverse(parse_syt(in.substr(0, semi)), parse_syt(in.substr(semi + 1))).str();
  }
  fail(Errc::invalid_argument, "unknown map '" + map + "'");
}

void yamanouchi(int len, std::vector<int>& cur, std::vector<int>& cnt, const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == len) {
    visit(cur);
    return;
  }
  for (int v = 1; v <= 3; ++v) {
    if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
    ++cnt[v];
    cur.push_back(v);
    yamanouchi(len, cur, cnt, visit);
    cur.pop_back();
    --cnt[v];
  }
}

std::string map_table(const std::string& map, int n, const std::vector<int>& tau) {
  std::ostringstream os;
  auto line = [&](const std::string& in) { os << in << '\t' << map_one(map, in, tau) << '\n'; };
  auto perms = [&](const std::vector<Permutation>& v) {
    for (const Permutation& p : v) line(p.str());
  };
  if (map == "phi") perms(enumerate_avoiders(n, parse_pattern_set("1234")));
  else if (map == "phi-inv") perms(enumerate_da(n, parse_pattern_set("1234")));
  else if (map == "theta") perms(enumerate_da(n, parse_pattern_set("2413")));
  else if (map == "theta-inv") {
    if (n % 2) fail(Errc::invalid_argument, "Dyck paths have even length");
    for (const std::string& d : dyck_paths(n / 2)) line(d);
  } else if (map == "psi") perms(enumerate_da(n, PatternSet{pattern_12tau(tau)}));
  else if (map == "psi-inv") perms(enumerate_da(n, PatternSet{pattern_21tau(tau)}));
  else if (map == "rsk") perms(enumerate_avoiders(n, {}));
  else if (map == "colpair-inv") {
    std::vector<int> cur, cnt(4, 0);
    yamanouchi(n, cur, cnt, [&](const std::vector<int>& w) { line(word_str(w)); });
  } else {
    fail(Errc::invalid_argument, "no table for map '" + map + "'");
  }
  return os.str();
}

SkewTableau read_tableau(const json& v, const json& opts) {
  std::optional<int> letters;
  if (opts.contains("letters")) letters = opts["letters"].get<int>();
  const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  SkewTableau t = !text.empty() && text.front() == '{' ? tableau_from_json(text) : parse_tableau(text, letters);
  if (opts.contains("box")) {
    Box box{opts["box"].at(0).get<int>(), opts["box"].at(1).get<int>()};
    t = with_boxes(t, box, Box{t.letters(), std::max(t.companion_box.cols, box.cols)});
  }
  if (opts.contains("orientation")) {
    const std::string o = opts["orientation"].get<std::string>();
    Orientation ori = o == "lr" ? Orientation::lr : o == "anti-lr" ? Orientation::anti_lr : Orientation::none;
    if (ori == Orientation::none) fail(Errc::parse_error, "unknown orientation '" + o + "'");
    std::optional<SkewTableau> u = orient(t, ori);
    if (!u) fail(Errc::not_lr, "tableau is not " + o + ": " + t.str());
    t = *u;
  }
  return t;
}

json tj(const SkewTableau& t) {
  json j = json::parse(tableau_to_json(t));
  j["text"] = t.str();
  return j;
}

json matrix_json(const Matrix& m) { return m; }

std::string tableau_op(const std::string& op, const SkewTableau& t, const json& opts) {
  json out;
  out["op"] = op;
  out["input"] = tj(t);
  auto other = [&] {
    if (!opts.contains("other")) fail(Errc::invalid_argument, op + " needs a second tableau ('other')");
    return read_tableau(opts["other"], json::object());
  };
  if (op == "show") {
    out["pretty"] = tableau_pretty(t);
    out["weight"] = t.weight();
    out["lr"] = is_lr(t);
    out["antiLr"] = is_anti_lr(t);
  } else if (op == "jdt") {
    out["result"] = tj(jdt(t));
  } else if (op == "rsk") {
    TableauPair pq = rsk_tableau(t);
    out["P"] = tj(pq.P);
    out["Q"] = tj(pq.Q);
  } else if (op == "rsk-inv") {
    out["result"] = tj(rsk_tableau_inverse(t, other()));
  } else if (op == "rec") {
    out["result"] = matrix_json(recording_matrix(t));
  } else if (op == "tau") {
    out["result"] = tj(companion_tableau(t));
  } else if (op == "rotate") {
    out["result"] = tj(rotate(t));
  } else if (op == "bk") {
    out["result"] = tj(bender_knuth(t, opts.value("i", 1)));
  } else if (op == "xi") {
    out["result"] = tj(schuetzenberger(t));
  } else if (op == "evacuation") {
    out["result"] = tj(evacuation(t));
  } else if (op == "chi") {
    out["result"] = tj(reversal(t));
  } else if (op == "rho") {
    out["result"] = tj(rho(t));
  } else if (op == "rho-dual") {
    out["result"] = tj(rho_dual(t));
  } else if (op == "omega") {
    out["result"] = tj(omega(t));
  } else if (op == "omega-bk") {
    out["result"] = tj(omega_bk(t));
  } else if (op == "switch") {
    // t is the inner tableau S, other the outer T.
    auto [tp, sp] = tableau_switch(t, other());
    out["T"] = tj(tp);
    out["S"] = tj(sp);
  } else if (op == "is-lr") {
    out["result"] = is_lr(t);
  } else if (op == "verify-diagram") {
    DiagramReport d = verify_diagram(t);
    out["ok"] = d.ok;
    out["failures"] = d.failures;
  } else {
    fail(Errc::invalid_argument, "unknown tableau op '" + op + "'");
  }
  return out.dump(2);
}

json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return json::object();
  try {
    json j = json::parse(options_json);
    if (!j.is_object()) fail(Errc::parse_error, "options must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("options JSON: ") + e.what());
  }
}

}  // namespace

extern "C" {

pm_context* pm_context_new(void) { return new (std::nothrow) pm_context(); }

void pm_context_free(pm_context* ctx) { delete ctx; }

const char* pm_last_error(const pm_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

const char* pm_status_name(int status) {
  if (status == PM_INTERNAL) return "Internal";
  if (status < 0 || status > PM_NO_PLACEMENT) return "Unknown";
  return errc_name(static_cast<Errc>(status));
}

const char* pm_version(void) { return "0.1.0"; }

int pm_limits(pm_context* ctx, const char** out_json) {
  return guarded(ctx, [&] {
    const Limits& l = Limits::get();
    json j = {{"size", l.size}, {"da", l.da_size}, {"tree", l.tree}, {"box", l.box}, {"letters", l.letters}};
    out_arg(out_json) = publish(ctx, j.dump());
  });
}

int pm_count(pm_context* ctx, const char* patterns, int n, int da, int workers, int64_t* out) {
  return guarded(ctx, [&] {
    const PatternSet ts = parse_pattern_set(patterns ? patterns : "");
    out_arg(out) = da ? count_da(n, ts) : count_avoiders(n, ts, workers);
  });
}

int pm_count_extended(pm_context* ctx, const char* patterns, int d, int c, int r, int64_t* out) {
  return guarded(ctx, [&] { out_arg(out) = count_extended(d, c, r, parse_pattern_set(str_arg(patterns, "patterns"))); });
}

int pm_series_brute(pm_context* ctx, const char* patterns, const char* rule, const char* orders, int max_total, const char** out) {
  return guarded(ctx, [&] {
    ParentRule pr = parse_rule(rule ? rule : "ext");
    Orders o = parse_orders(str_arg(orders, "orders"));
    if (!is_extended(pr)) o.y = o.z = 0;
    MultiSeries s = brute_series(parse_pattern_set(str_arg(patterns, "patterns")), pr, o, max_total);
    out_arg(out) = publish(ctx, s.dump(max_total));
  });
}

int pm_series_formula(pm_context* ctx, const char* formula, const char* orders, int max_total, const char** out) {
  return guarded(ctx, [&] {
    MultiSeries s = expand_rational(str_arg(formula, "formula"), parse_orders(str_arg(orders, "orders")));
    out_arg(out) = publish(ctx, s.dump(max_total));
  });
}

int pm_series_graph(pm_context* ctx, const char* patterns, const char* rule, int depth_n, int depth_t, const char* orders,
                    int max_total, const char** out) {
  return guarded(ctx, [&] {
    ParentRule pr = parse_rule(rule ? rule : "ext");
    Orders o = parse_orders(str_arg(orders, "orders"));
    if (!is_extended(pr)) o.y = o.z = 0;
    GeneratingGraph g = discover_graph(parse_pattern_set(str_arg(patterns, "patterns")), pr, depth_n, depth_t);
    out_arg(out) = publish(ctx, walk_series(g, o).dump(max_total));
  });
}

int pm_discover(pm_context* ctx, const char* patterns, const char* rule, int depth_n, int depth_t, const char* format,
                const char** out) {
  return guarded(ctx, [&] {
    GeneratingGraph g = discover_graph(parse_pattern_set(str_arg(patterns, "patterns")), parse_rule(rule ? rule : "ext"), depth_n, depth_t);
    const std::string f = format ? format : "json";
    if (f == "dot") out_arg(out) = publish(ctx, graph_to_dot(g));
    else if (f == "json") out_arg(out) = publish(ctx, graph_to_json(g));
    else fail(Errc::invalid_argument, "graph format must be dot or json");
  });
}

int pm_graph_equivalent(pm_context* ctx, const char* a, const char* b, int depth_n, int depth_t, int* out) {
  return guarded(ctx, [&] {
    out_arg(out) = graph_equivalent(parse_pattern_set(str_arg(a, "patterns")), parse_pattern_set(str_arg(b, "patterns")), depth_n, depth_t).equivalent;
  });
}

int pm_biject(pm_context* ctx, const char* map, const char* input, const char* tau, const char** out) {
  return guarded(ctx, [&] {
    const std::string in = str_arg(input, "input");
    out_arg(out) = publish(ctx, in + "\t" + map_one(str_arg(map, "map"), in, tau_arg(tau)) + "\n");
  });
}

int pm_biject_table(pm_context* ctx, const char* map, int n, const char* tau, const char** out) {
  return guarded(ctx, [&] { out_arg(out) = publish(ctx, map_table(str_arg(map, "map"), n, tau_arg(tau))); });
}

int pm_tableau(pm_context* ctx, const char* op, const char* tableau, const char* options_json, const char** out_json) {
  return guarded(ctx, [&] {
    json opts = parse_options(options_json);
    SkewTableau t = read_tableau(json(str_arg(tableau, "tableau")), opts);
    out_arg(out_json) = publish(ctx, tableau_op(str_arg(op, "op"), t, opts));
  });
}

int pm_lr_coefficient(pm_context* ctx, const char* lambda, const char* mu, const char* nu, int64_t* out) {
  return guarded(ctx, [&] {
    out_arg(out) = lr_coefficient(parse_partition(str_arg(lambda, "lambda")), parse_partition(mu ? mu : ""), parse_partition(nu ? nu : ""));
  });
}

int pm_suites(pm_context* ctx, const char** out_json) {
  return guarded(ctx, [&] {
    json j = json::array();
    for (const SuiteInfo& s : suite_registry()) j.push_back({{"name", s.name}, {"title", s.title}, {"conjecture", s.conjecture}});
    out_arg(out_json) = publish(ctx, j.dump(2));
  });
}

int pm_verify(pm_context* ctx, const char* suite, const char* options_json, const char* format, const char** out, int* hard_failure) {
  return guarded(ctx, [&] {
    json j = parse_options(options_json);
    SuiteOptions o;
    if (j.contains("box")) {
      o.box_rows = j["box"].at(0).get<int>();
      o.box_cols = j["box"].at(1).get<int>();
    }
    o.letters = j.value("letters", o.letters);
    o.n = j.value("n", o.n);
    o.seed = j.value("seed", o.seed);
    SuiteReport r = run_suite(str_arg(suite, "suite"), o);
    const std::string f = format ? format : "text";
    if (f == "json") out_arg(out) = publish(ctx, report_to_json(r));
    else if (f == "text") out_arg(out) = publish(ctx, report_to_text(r));
    else fail(Errc::invalid_argument, "report format must be json or text");
    if (hard_failure) *hard_failure = !r.ok() && !r.conjecture;
  });
}

}  // extern "C"
