#include "qmirror/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "qmirror/error.hpp"
#include "qmirror/io.hpp"
#include "qmirror/mirror.hpp"

namespace qmirror::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, what + " '" + text + "' is not a comma-separated integer list");
    }
  }
  return out;
}

Orders parse_orders(const std::string& text) {
  const auto v = parse_int_list(text, "orders");
  if (v.size() != 2 || v[0] < 0 || v[1] < 0)
    throw Error(ErrorKind::InvalidArgument, "orders '" + text + "' must be two nonnegative integers NZ,NA");
  return {v[0], v[1]};
}

Orders default_orders() {
  if (const char* env = std::getenv("QMIRROR_ORDERS")) return parse_orders(env);
  return {};
}

std::string vec_str(const RatVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

std::string cone_str(const RationalCone& c) {
  std::string s = "cone(";
  for (size_t i = 0; i < c.generators.size(); ++i) s += (i ? ", " : "") + vec_str(c.generators[i]);
  return s + (c.open ? ") open" : ") closed");
}

Json rat_vector_json(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json cone_json(const RationalCone& c) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(rat_vector_json(g));
  j["generators"] = std::move(gens);
  j["open"] = c.open;
  return j;
}

std::string points_str(const std::vector<FixedPoint>& pts) {
  std::string s;
  for (size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + pts[i].str();
  return s;
}

Json points_json(const std::vector<FixedPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p.one_based());
  return out;
}

std::string a_monomial_str(const std::vector<int>& exps) {
  Monomial m(static_cast<int>(exps.size()));
  m.a = exps;
  return m.str();
}

void print_series(std::ostream& out, const TruncatedSeries& s) {
  for (const auto& [m, c] : s.terms()) out << "  " << m.str() << " : " << c.str() << "\n";
}

void print_prefactor(std::ostream& out, const LogPrefactor& p) {
  const int n = p.n();
  bool any = false;
  out << "prefactor: exp((";
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u; v < 2 * n; ++v) {
      Rational c = p.matrix()(u, v) * (u == v ? 1 : 2);
      if (c == 0) continue;
      const Variable a = u < n ? Variable::z(u) : Variable::a(u - n);
      const Variable b = v < n ? Variable::z(v) : Variable::a(v - n);
      out << (c < 0 ? (any ? " - " : "-") : (any ? " + " : ""));
      any = true;
      if (abs(c) != 1) out << to_string(Rational(abs(c))) << "*";
      out << "ln " << a.str() << "*ln " << b.str();
    }
  if (!any) out << "0";
  out << ")/ln q)\n";
}

struct Context {
  std::ostream& out;
  bool json = false;
};

int cmd_validate(Context& ctx, const ToricDatum& x) {
  if (ctx.json) {
    Json j = datum_to_json(x);
    j["n"] = x.n;
    j["k"] = x.k;
    j["d"] = x.d;
    j["totallyUnimodular"] = true;
    ctx.out << j.dump(2) << "\n";
    return Ok;
  }
  ctx.out << "valid toric datum" << (x.name.empty() ? "" : " " + x.name) << ": n=" << x.n << " k=" << x.k
          << " d=" << x.d << "\n";
  ctx.out << "iota: " << to_string(x.iota) << "\n";
  ctx.out << "beta: " << to_string(x.beta) << "\n";
  return Ok;
}

int cmd_fixed_points(Context& ctx, const ToricDatum& x) {
  const auto pts = fixed_points(x);
  if (ctx.json) {
    ctx.out << points_json(pts).dump(2) << "\n";
    return Ok;
  }
  for (const auto& p : pts) ctx.out << p.str() << "\n";
  return Ok;
}

int cmd_cones(Context& ctx, const ToricDatum& x) {
  Json all = Json::array();
  for (const auto& p : fixed_points(x)) {
    const auto k = kahler_cone(x, p), a = attracting_cone(x, p), e = effective_cone(x, p);
    if (ctx.json) {
      Json j;
      j["point"] = p.one_based();
      j["kahler"] = cone_json(k);
      j["attracting"] = cone_json(a);
      j["effective"] = cone_json(e);
      all.push_back(std::move(j));
      continue;
    }
    ctx.out << p.str() << "\n";
    ctx.out << "  K   = " << cone_str(k) << "\n";
    ctx.out << "  A   = " << cone_str(a) << "\n";
    ctx.out << "  Eff = " << cone_str(e) << "\n";
  }
  if (ctx.json) ctx.out << all.dump(2) << "\n";
  return Ok;
}

int cmd_chambers(Context& ctx, const ToricDatum& x) {
  const auto cs = chambers(x);
  Json all = Json::array();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (ctx.json) {
      Json j = cone_json(cs[i].cone);
      j["sample"] = rat_vector_json(cs[i].sample);
      j["points"] = points_json(cs[i].points);
      all.push_back(std::move(j));
      continue;
    }
    ctx.out << "C" << i + 1 << ": " << cone_str(cs[i].cone) << ", sample " << vec_str(cs[i].sample) << ": "
            << points_str(cs[i].points) << "\n";
  }
  if (ctx.json) ctx.out << all.dump(2) << "\n";
  return Ok;
}

int cmd_restrictions(Context& ctx, const ToricDatum& x) {
  Json all = Json::array();
  for (const auto& p : fixed_points(x)) {
    const RestrictionTable t = u_restriction(x, p);
    if (ctx.json) {
      Json j;
      j["point"] = p.one_based();
      Json c = Json::array();
      for (Index r = 0; r < t.c.rows(); ++r) {
        Json row = Json::array();
        for (Index s = 0; s < t.c.cols(); ++s) row.push_back(integer_to_json(t.c(r, s)));
        c.push_back(std::move(row));
      }
      j["C"] = std::move(c);
      Json u = Json::object();
      for (size_t r = 0; r < t.outside.size(); ++r)
        u[std::to_string(t.outside[r] + 1)] = monomial_exponents_to_json(t.exponents[r]);
      j["U"] = std::move(u);
      all.push_back(std::move(j));
      continue;
    }
    ctx.out << p.str() << ": C = " << to_string(t.c);
    for (size_t r = 0; r < t.outside.size(); ++r)
      ctx.out << (r ? ", " : "; ") << "U" << t.outside[r] + 1 << " = " << a_monomial_str(t.exponents[r]);
    ctx.out << "\n";
  }
  if (ctx.json) ctx.out << all.dump(2) << "\n";
  return Ok;
}

int cmd_levels(Context& ctx, const ToricDatum& x) {
  const auto lv = effective_levels(x);
  if (ctx.json) {
    Json j = Json::array();
    for (const auto& v : lv) j.push_back(to_string(v));
    ctx.out << j.dump(2) << "\n";
    return Ok;
  }
  for (size_t j = 0; j < lv.size(); ++j) ctx.out << j + 1 << ": " << to_string(lv[j]) << "\n";
  return Ok;
}

std::vector<FixedPoint> selected_points(const ToricDatum& x, const std::string& point) {
  if (point.empty()) return fixed_points(x);
  const FixedPoint p = FixedPoint::from_one_based(parse_int_list(point, "point"));
  if (!is_fixed_point(x, p)) throw Error(ErrorKind::InvalidArgument, p.str() + " is not a fixed point of the datum");
  return {p};
}

int cmd_ifunction(Context& ctx, const ToricDatum& x, const std::string& point, const std::optional<int>& level,
                  Orders orders) {
  Json all = Json::array();
  for (const auto& p : selected_points(x, point)) {
    const FixedPointContribution c = level ? i_function(x, p, *level, orders) : i_eff_modified(x, p, orders);
    if (ctx.json) {
      all.push_back(contribution_to_json(c));
      continue;
    }
    ctx.out << p.str() << (level ? " level " + std::to_string(*level) : std::string(" modified effective-level"))
            << ", orders " << orders.z << "," << orders.a << "\n";
    if (!level) print_prefactor(ctx.out, c.contribution.prefactor);
    ctx.out << "series (" << c.contribution.series.size() << " terms):\n";
    print_series(ctx.out, c.contribution.series);
  }
  if (ctx.json) ctx.out << all.dump(2) << "\n";
  return Ok;
}

int cmd_diffeq(Context& ctx, const ToricDatum& x, Orders orders) {
  bool all_pass = true;
  Json results = Json::array();
  const auto kahler = circuits(x, Circuit::Side::Kahler);
  const auto equiv = circuits(x, Circuit::Side::Equivariant);
  auto record = [&](const FixedPoint& p, const std::string& kind, const std::string& detail, bool pass) {
    all_pass = all_pass && pass;
    if (ctx.json) {
      Json j;
      j["point"] = p.one_based();
      j["equation"] = kind;
      j["detail"] = detail;
      j["pass"] = pass;
      results.push_back(std::move(j));
    } else {
      ctx.out << (pass ? "PASS " : "FAIL ") << p.str() << " " << kind << (detail.empty() ? "" : " " + detail) << "\n";
    }
  };
  for (const auto& p : fixed_points(x)) {
    for (int i = 0; i < x.n; ++i)
      record(p, "linear-relation", "i=" + std::to_string(i + 1),
             check_equation(x, p, linear_relation_operator(x.n, i), orders, false).pass);
    for (const auto& c : kahler) record(p, "kahler", c.str(), check_equation(x, p, kahler_operator(c), orders, false).pass);
    for (const auto& c : equiv)
      record(p, "equivariant", c.str(), check_equation(x, p, equivariant_operator(c), orders, true).pass);
    record(p, "recursion", "", uniqueness_recursion_check(x, p, kahler, orders).pass);
  }
  if (ctx.json) {
    Json j;
    j["datum"] = x.name;
    j["orders"] = Json::array({orders.z, orders.a});
    j["results"] = std::move(results);
    j["pass"] = all_pass;
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << (all_pass ? "all equations hold" : "some equations FAIL") << "\n";
  }
  return all_pass ? Ok : VerificationFailed;
}

int cmd_mirror(Context& ctx, const ToricDatum& x, Orders orders) {
  const MirrorReport r = mirror_verify(x, orders);
  if (ctx.json) {
    ctx.out << report_to_json(r).dump(2) << "\n";
    return r.pass ? Ok : VerificationFailed;
  }
  for (const auto& pr : r.points) {
    ctx.out << (pr.pass ? "PASS " : "FAIL ") << pr.point.str() << " <-> " << pr.mirror.str() << ": prefactor "
            << (pr.prefactor_equal ? "equal" : "DIFFERS") << ", " << pr.diffs.size() << " coefficient diffs\n";
    if (!pr.diffs.empty()) {
      const auto& d = pr.diffs.front();
      ctx.out << "  first diff at " << d.monomial.str() << ": " << d.primal.str() << " vs " << d.dual.str() << "\n";
    }
  }
  ctx.out << "mirror identity at orders " << orders.z << "," << orders.a << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
  return r.pass ? Ok : VerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric stack combinatorics, K-theoretic I-functions and 3d mirror checks", "qmirror"};
  app.require_subcommand(1);
  Context ctx{out};
  std::string datum_path, point, orders_text;
  std::optional<int> level;
  app.add_flag("--json", ctx.json, "Emit JSON");

  std::function<int(const ToricDatum&)> action;
  auto add = [&](const std::string& name, const std::string& help, std::function<int(const ToricDatum&)> f) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("datum", datum_path, "Datum file (JSON with an \"iota\" matrix)")->required();
    sub->add_flag("--json", ctx.json, "Emit JSON");
    sub->callback([&action, f] { action = f; });
    return sub;
  };
  auto with_orders = [&](CLI::App* sub) {
    sub->add_option("--orders", orders_text, "Truncation orders NZ,NA (default $QMIRROR_ORDERS or 3,3)");
  };
  auto orders = [&] { return orders_text.empty() ? default_orders() : parse_orders(orders_text); };

  add("validate", "Check the charge matrix and print the exact sequence",
      [&](const ToricDatum& x) { return cmd_validate(ctx, x); });
  add("dual", "Print the Gale dual datum", [&](const ToricDatum& x) {
    out << datum_to_json(gale_dual(x)).dump(2) << "\n";
    return static_cast<int>(Ok);
  });
  add("fixed-points", "List torus fixed points", [&](const ToricDatum& x) { return cmd_fixed_points(ctx, x); });
  add("cones", "Kahler, attracting and effective cones per fixed point",
      [&](const ToricDatum& x) { return cmd_cones(ctx, x); });
  add("chambers", "GIT chambers and their fixed points (k <= 2)",
      [&](const ToricDatum& x) { return cmd_chambers(ctx, x); });
  add("restrictions", "Restrictions U_i|_p per fixed point", [&](const ToricDatum& x) { return cmd_restrictions(ctx, x); });
  add("levels", "Effective levels", [&](const ToricDatum& x) { return cmd_levels(ctx, x); });
  CLI::App* ifn = add("ifunction", "Fixed-point I-function series",
                      [&](const ToricDatum& x) { return cmd_ifunction(ctx, x, point, level, orders()); });
  ifn->add_option("--point", point, "Fixed point as 1-based indices, e.g. 1,3 (default: all)");
  ifn->add_option("--level", level, "Level l of the plain series (default: modified effective-level form)");
  with_orders(ifn);
  with_orders(add("diffeq-check", "Verify the q-difference equations and the recursion",
                  [&](const ToricDatum& x) { return cmd_diffeq(ctx, x, orders()); }));
  with_orders(add("mirror-check", "Verify the 3d mirror identity point by point",
                  [&](const ToricDatum& x) { return cmd_mirror(ctx, x, orders()); }));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
  try {
    return action(read_datum_file(datum_path));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
}

}  // namespace qmirror::cli
