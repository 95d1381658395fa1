#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pnc/parse.hpp"
#include "pnc/pnc.hpp"

using namespace pnc;
using json = nlohmann::ordered_json;

namespace {

const char* kVersion = "1.0.0";
const int kSchema = 1;

// an argument naming an existing file is read from that file
std::string source(const std::string& arg) {
  std::error_code ec;
  if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

struct Out {
  bool as_json = false;
  json j;
  std::ostringstream text;
};

json fields(Namer& nm) {
  json arr = json::array();
  std::istringstream in(nm.header());
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find(": ");
    if (p == std::string::npos) continue;
    arr.push_back({{"name", line.substr(0, p)}, {"relation", line.substr(p + 2)}});
  }
  return arr;
}

void emit(Out& o, Namer& nm) {
  if (o.as_json) {
    json j;
    j["schema_version"] = kSchema;
    j["tool_version"] = kVersion;
    for (auto& [k, v] : o.j.items()) j[k] = v;
    j["fields"] = fields(nm);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::string h = nm.header();
  if (!h.empty()) std::cout << "where " << h << (h.back() == '\n' ? "" : "\n");
  std::cout << o.text.str();
}

json class_json(const SmallOrbitClass& c) {
  json j{{"id", c.id()}, {"label", c.label()}};
  if (c.small()) j["dimension"] = c.dim;
  if (!c.params.empty()) j["params"] = c.params;
  return j;
}

std::string class_text(const SmallOrbitClass& c) {
  std::string s = c.id() + " (" + c.label();
  if (c.small()) s += ", orbit dimension " + std::to_string(c.dim);
  if (!c.params.empty()) s += ", " + c.params;
  return s + ")";
}

void cmd_analyze(const std::string& poly, Out& o) {
  ParseContext ctx;
  Form F = parse_form(source(poly), ctx);
  Namer& nm = ctx.names;
  PlaneCurve C(F);
  PNCResult r = enumerate_components(C);
  Boundary bd = boundary(C, r);
  int counts[6] = {0};
  for (auto& c : r.components) counts[(int)c.type]++;
  std::string cs;
  for (int t = 1; t <= 5; ++t) cs += (t > 1 ? " " : "") + type_name((MarkerType)t) + ":" + std::to_string(counts[t]);

  json comps = json::array(), drops = json::array(), bl = json::array();
  auto& tx = o.text;
  tx << "curve: " << F.str(&nm) << "\n";
  tx << "factored: " << factored_str(C.factorization(), &nm) << "\n";
  tx << "components: " << r.components.size() << " (" << cs << ")\n";
  int k = 0;
  for (auto& c : r.components) {
    const Candidate& rep = c.rep();
    tx << "[" << ++k << "] type " << type_name(c.type) << ": " << rep.feature(&nm) << "\n";
    json germs = json::array();
    for (std::size_t i = 0; i < c.reps.size(); ++i) {
      tx << (i == 0 ? "    germ: " : "    merged germ: ") << c.reps[i].germ.str(&nm) << "\n";
      germs.push_back(c.reps[i].germ.str(&nm));
    }
    tx << "    limit: " << rep.limit.form.str(&nm) << "  (t-order " << rep.limit.order << ")\n";
    tx << "    factored: " << factored_str(c.limit_factors, &nm) << "\n";
    tx << "    class: " << class_text(c.cls) << "\n";
    comps.push_back({{"type", type_name(c.type)},
                     {"feature", rep.feature(&nm)},
                     {"germs", germs},
                     {"limit", rep.limit.form.str(&nm)},
                     {"limit_factored", factored_str(c.limit_factors, &nm)},
                     {"order", rep.limit.order},
                     {"classification", class_json(c.cls)}});
  }
  if (!r.dropped.empty()) tx << "dropped candidates:\n";
  for (auto& d : r.dropped) {
    std::string lim = d.cand.limit.form.is_zero() ? "" : d.cand.limit.form.str(&nm);
    tx << "  type " << type_name(d.cand.type) << ": " << d.cand.feature(&nm) << ": " << d.reason;
    if (!lim.empty()) tx << " (limit " << lim << ")";
    tx << "\n";
    json dj{{"type", type_name(d.cand.type)}, {"feature", d.cand.feature(&nm)}, {"reason", d.reason}};
    if (!lim.empty()) dj["limit"] = lim;
    drops.push_back(dj);
  }
  tx << "boundary:";
  for (auto& [L, cl] : bd.limits) {
    tx << " " << cl.id();
    bl.push_back({{"limit", L.form.str(&nm)}, {"classification", class_json(cl)}});
  }
  tx << (bd.limits.empty() ? " (no marker limits)" : "") << "\n";
  tx << "star family: " << bd.star_family << "\n";
  json cj;
  for (int t = 1; t <= 5; ++t) cj[type_name((MarkerType)t)] = counts[t];
  o.j = {{"command", "analyze"},  {"curve", F.str(&nm)},     {"factored", factored_str(C.factorization(), &nm)},
         {"counts", cj},          {"components", comps},     {"dropped", drops},
         {"boundary", bl},        {"star_family", bd.star_family}};
  emit(o, nm);
}

void cmd_limit(const std::string& poly, const std::string& germ, Out& o) {
  ParseContext ctx;
  Form F = parse_form(source(poly), ctx);
  Germ g(parse_germ(source(germ), ctx));
  Namer& nm = ctx.names;
  LimitCurve L = apply_germ(F, g);
  Factorization fac = factor(L.form);
  SmallOrbitClass cl = classify_limit(fac);
  std::string star = g.center_rank() == 1 ? (is_kernel_star(L.form, g) ? "yes" : "no") : "n/a (center rank " + std::to_string(g.center_rank()) + ")";
  o.text << "order: " << L.order << "\nlimit: " << L.form.str(&nm) << "\nfactored: " << factored_str(fac, &nm)
         << "\nclass: " << class_text(cl) << "\nkernel star: " << star << "\n";
  o.j = {{"command", "limit"},
         {"curve", F.str(&nm)},
         {"germ", g.str(&nm)},
         {"order", L.order},
         {"limit", L.form.str(&nm)},
         {"limit_factored", factored_str(fac, &nm)},
         {"classification", class_json(cl)},
         {"kernel_star", star}};
  emit(o, nm);
}

void cmd_normalize(const std::string& germ, Out& o) {
  ParseContext ctx;
  Germ g(parse_germ(source(germ), ctx));
  Namer& nm = ctx.names;
  StandardForm s = normalize_germ(g);
  o.text << s.str(&nm) << "\nstandard germ: " << s.reconstruct().str(&nm) << "\n";
  auto mat = [&](const Mat3& A) {
    json m = json::array();
    for (auto& row : A) {
      json r = json::array();
      for (auto& e : row) r.push_back(to_string(e, &nm));
      m.push_back(r);
    }
    return m;
  };
  o.j = {{"command", "normalize"},  {"input", g.str(&nm)},       {"b", s.b},          {"c", s.c},
         {"q", s.q.str("t", &nm)}, {"r", s.r.str("t", &nm)},    {"s", s.s.str("t", &nm)},
         {"H", mat(s.H)},           {"M", mat(s.M)},             {"reparametrization", s.tau.str("t", &nm)},
         {"rescale", s.reduced},    {"standard_germ", s.reconstruct().str(&nm)}};
  emit(o, nm);
}

Flag read_flag(const std::string& point, const std::string& line, ParseContext& ctx) {
  Vec3 p = parse_point(source(point), ctx);
  Vec3 l;
  std::string ls = source(line);
  if (ls.find_first_of("xyz") != std::string::npos)
    l = parse_form(ls, ctx).as_line();
  else
    l = parse_point(ls, ctx);
  return {normalized(p), normalized(l)};
}

void cmd_newton(const std::string& poly, const std::string& point, const std::string& line, Out& o) {
  ParseContext ctx;
  Form F = parse_form(source(poly), ctx);
  Flag fl = read_flag(point, line, ctx);
  Namer& nm = ctx.names;
  NewtonPolygon np = newton_polygon(F, fl);
  json verts = json::array(), sides = json::array();
  o.text << "flag: " << point_str(fl.p, &nm) << ", " << line_str(fl.l, &nm) << "\n";
  o.text << "usable: " << (np.usable ? "yes" : "no (flag line not in the tangent cone)") << "\nvertices:";
  for (auto& [j, k] : np.vertices) {
    o.text << " (" << j << "," << k << ")";
    verts.push_back({j, k});
  }
  o.text << "\n";
  for (auto& s : np.sides) {
    bool rel = s.b < s.c;
    o.text << "side (" << s.j0 << "," << s.k0 << ")-(" << s.j1 << "," << s.k1 << ") slope -" << s.b << "/" << s.c
           << " segments " << s.S << (rel ? " relevant" : "");
    json sj{{"from", {s.j0, s.k0}}, {"to", {s.j1, s.k1}}, {"b", s.b}, {"c", s.c}, {"segments", s.S}, {"relevant", rel}};
    if (rel && np.usable) {
      Form L = side_limit_form(F, fl, s);
      o.text << " limit " << L.str(&nm);
      sj["limit"] = L.str(&nm);
    }
    o.text << "\n";
    sides.push_back(sj);
  }
  o.j = {{"command", "newton"}, {"usable", np.usable}, {"vertices", verts}, {"sides", sides}};
  emit(o, nm);
}

void cmd_puiseux(const std::string& poly, const std::string& point, const std::string& line, const std::string& order,
                 Out& o) {
  ParseContext ctx;
  Form F = parse_form(source(poly), ctx);
  Flag fl = read_flag(point, line, ctx);
  Namer& nm = ctx.names;
  Rational q(0);
  if (!order.empty()) {
    try {
      q = Rational(order);
      q.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ParseError("bad order '" + order + "'", 0);
    }
  }
  PlaneCurve C(F);
  auto br = puiseux_branches(C, fl, q);
  auto ch = characteristics(br);
  json bj = json::array(), cj = json::array();
  int k = 0;
  for (auto& b : br) {
    o.text << "branch " << ++k << ": " << b.str(&nm) << (b.swapped ? "  [swapped: y as a series in z]" : "") << "\n";
    bj.push_back({{"series", b.str(&nm)}, {"swapped", b.swapped}, {"exact", b.exact}, {"order", to_string(b.order)}});
  }
  for (auto& d : ch) {
    std::string g;
    json gj = json::array();
    for (auto& x : d.gamma_C) {
      g += (g.empty() ? "" : ", ") + to_string(x, &nm);
      gj.push_back(to_string(x, &nm));
    }
    o.text << "characteristic: lambda0=" << to_string(d.lambda0) << " C=" << to_string(d.C) << " S=" << d.S()
           << " gamma_C={" << g << "}\n";
    cj.push_back({{"lambda0", to_string(d.lambda0)}, {"C", to_string(d.C)}, {"S", d.S()}, {"gamma_C", gj}});
  }
  o.j = {{"command", "puiseux"}, {"branches", bj}, {"characteristics", cj}};
  emit(o, nm);
}

void cmd_classify(const std::string& poly, Out& o) {
  ParseContext ctx;
  Form F = parse_form(source(poly), ctx);
  Namer& nm = ctx.names;
  Factorization fac = factor(F);
  SmallOrbitClass cl = classify_limit(fac);
  o.text << "factored: " << factored_str(fac, &nm) << "\nclass: " << class_text(cl) << "\n";
  if (cl.small()) {
    o.text << "specializes to:";
    json sp = json::array();
    for (int i = 1; i <= 12; ++i)
      if (i != cl.item && specializes_to(cl.item, i)) {
        o.text << " item_" << i;
        sp.push_back("item_" + std::to_string(i));
      }
    o.text << "\n";
    o.j["specializes_to"] = sp;
  }
  o.j["command"] = "classify";
  o.j["curve"] = F.str(&nm);
  o.j["factored"] = factored_str(fac, &nm);
  o.j["classification"] = class_json(cl);
  emit(o, nm);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective normal cone components and limits of plane curves"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Out o;
  int tower = limits().tower_height, tcap = limits().t_degree_cap;
  long porder = limits().puiseux_order_cap;
  app.add_flag("--json", o.as_json, "machine-readable output");
  app.add_option("--tower-height", tower, "maximum height of the field tower")->check(CLI::PositiveNumber);
  app.add_option("--puiseux-order", porder, "cap on Puiseux truncation order (0: automatic)")->check(CLI::NonNegativeNumber);
  app.add_option("--t-degree-cap", tcap, "maximum t-degree in germ substitutions")->check(CLI::PositiveNumber);

  std::string poly, germ, point, line, order;
  auto* an = app.add_subcommand("analyze", "enumerate PNC components");
  an->add_option("poly", poly)->required();
  auto* li = app.add_subcommand("limit", "limit of a curve along a germ");
  li->add_option("poly", poly)->required();
  li->add_option("germ", germ)->required();
  auto* no = app.add_subcommand("normalize", "standard form of a germ");
  no->add_option("germ", germ)->required();
  auto* ne = app.add_subcommand("newton", "Newton polygon at a flag");
  ne->add_option("poly", poly)->required();
  ne->add_option("point", point)->required();
  ne->add_option("line", line)->required();
  auto* pu = app.add_subcommand("puiseux", "formal branches at a flag");
  pu->add_option("poly", poly)->required();
  pu->add_option("point", point)->required();
  pu->add_option("line", line)->required();
  pu->add_option("--order", order, "truncation order (rational)");
  auto* cl = app.add_subcommand("classify", "small-orbit classification of a curve");
  cl->add_option("poly", poly)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  limits().tower_height = tower;
  limits().t_degree_cap = tcap;
  limits().puiseux_order_cap = porder;
  try {
    if (*an) cmd_analyze(poly, o);
    if (*li) cmd_limit(poly, germ, o);
    if (*no) cmd_normalize(germ, o);
    if (*ne) cmd_newton(poly, point, line, o);
    if (*pu) cmd_puiseux(poly, point, line, order, o);
    if (*cl) cmd_classify(poly, o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    std::cerr << "precision cap: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
