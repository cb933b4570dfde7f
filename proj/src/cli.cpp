#include "angcalc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "angcalc/io.hpp"

namespace angcalc::cli {

namespace {

using io::Json;

enum class Format { Json, Text, Dot };

struct Options {
  int d = 0, l = 0, m = 0;
  std::string format = "json";
  std::vector<int> sub;
};

struct Emit {
  std::ostream& out;
  Format format;

  void json(const Json& j) const { out << j.dump(2) << "\n"; }
  void line(const std::string& s) const { out << s << "\n"; }
};

[[noreturn]] void usage(const std::string& what) { throw DomainError(ErrorKind::ParseError, what); }

std::string positions_text(const Angle& a) {
  std::string s;
  for (const auto& x : a.objects()) {
    s += s.empty() ? "" : " ";
    if (x.is_zero()) s += "_";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "+" : "") + std::to_string(x[i].pos);
  }
  return s;
}

void emit_angle(const Emit& e, const Angle& a) {
  if (e.format == Format::Json) return e.json(io::to_json(a));
  e.line(io::render_text(a));
  e.line("positions: " + positions_text(a));
}

void emit_chain(const Emit& e, const FLevelChain& c) {
  if (e.format == Format::Json) return e.json(io::to_json(c));
  const auto& p = c.anchor.params();
  std::string s;
  for (const auto& x : c.objects) s += (s.empty() ? "" : " -> ") + io::render_text(p, x);
  e.line(s);
  e.line(std::string("exact: ") + (check_flevel_exactness(c).pass ? "yes" : "no"));
}

IndecObject index_arg(const FamilyParams& p, const std::string& s) {
  const bool numeric = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  return io::parse_object(p, numeric ? "f" + s : s);
}

Morphism chain_anchor(const FamilyParams& p, const std::string& si, const std::string& sj) {
  const IndecObject i = index_arg(p, si), j = index_arg(p, sj);
  if (j.pos - i.pos < 1 || j.pos - i.pos > p.l() - 1)
    throw DomainError(ErrorKind::BadDistance, "need 1 <= j - i <= l - 1");
  return basis_mor(p, i, j);
}

int exit_code(ErrorKind k) {
  return (k == ErrorKind::ParseError || k == ErrorKind::ConstraintViolation) ? 2 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculator for the (d+2)-angulated categories of kA_m/rad^l", "angcalc"};
  Options o;
  app.set_config("--config", "", "key=value file with the same keys as the flags");
  app.add_option("--d", o.d, "d (even, >= 2)")->required();
  app.add_option("--l", o.l, "l (>= 2)")->required();
  app.add_option("--m", o.m, "m, with 2(m-1) = d*l")->required();
  app.add_option("--format", o.format, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--sub", o.sub, "subcategory as comma-separated indices")->delimiter(',')->allow_extra_args(false);
  app.fallthrough();
  app.require_subcommand(1);

  std::string x, y, z, target;
  std::int64_t from = 0, to = 0;

  auto* c_params = app.add_subcommand("params", "validated parameters");
  auto* c_hom = app.add_subcommand("hom", "Hom between indecomposables");
  c_hom->add_option("x", x)->required();
  c_hom->add_option("y", y)->required();
  auto* c_compose = app.add_subcommand("compose", "u(y->z) o u(x->y)");
  c_compose->add_option("x", x)->required();
  c_compose->add_option("y", y)->required();
  c_compose->add_option("z", z)->required();
  auto* c_angle = app.add_subcommand("angle", "minimal angle on the basis morphism x -> y");
  c_angle->add_option("x", x)->required();
  c_angle->add_option("y", y)->required();
  CLI::App* c_chain[3];
  const char* chain_names[3] = {"dkernel", "dcokernel", "dexact"};
  for (int k = 0; k < 3; ++k) {
    c_chain[k] = app.add_subcommand(chain_names[k], "F-level chain on f_i -> f_j");
    c_chain[k]->add_option("i", x)->required();
    c_chain[k]->add_option("j", y)->required();
  }
  auto* c_ar = app.add_subcommand("ar", "AR angle ending at x (in --sub if given)");
  c_ar->add_option("x", x)->required();
  auto* c_cover = app.add_subcommand("cover", "cover of x by --sub");
  c_cover->add_option("x", x)->required();
  auto* c_wide = app.add_subcommand("wide", "wide subcategories");
  c_wide->require_subcommand(1);
  auto* c_wide_list = c_wide->add_subcommand("list", "all wide specs");
  auto* c_wide_check = c_wide->add_subcommand("check", "classify one spec");
  c_wide_check->add_option("S", z)->required();
  auto* c_verify = app.add_subcommand("verify", "oracle suite: core angles wide ar theorem-b all");
  c_verify->add_option("target", target)->required();
  auto* c_quiver = app.add_subcommand("quiver", "quiver window");
  auto* o_from = c_quiver->add_option("--from", from);
  auto* o_to = c_quiver->add_option("--to", to);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const FamilyParams p = validate_params(o.d, o.l, o.m);
    const Format fmt = o.format == "text" ? Format::Text : o.format == "dot" ? Format::Dot : Format::Json;
    const Emit e{out, fmt};
    const bool is_quiver = c_quiver->parsed();
    if (fmt == Format::Dot && !is_quiver) usage("--format dot is only available for quiver");
    std::optional<SubcatSpec> sub;
    if (app.count("--sub")) sub = SubcatSpec(p, o.sub);

    if (c_params->parsed()) {
      if (fmt == Format::Json) e.json(io::to_json(p));
      else e.line("d=" + std::to_string(p.d()) + " l=" + std::to_string(p.l()) + " m=" + std::to_string(p.m()) +
                  " period=" + std::to_string(p.period()));
    } else if (c_hom->parsed()) {
      const IndecObject a = io::parse_object(p, x), b = io::parse_object(p, y);
      const int dim = hom_dim(p, a, b);
      if (fmt == Format::Json) {
        Json basis = Json::array();
        if (dim) basis.push_back(io::to_json(basis_mor(p, a, b)));
        e.json(Json{{"source", io::to_json(p, a)}, {"target", io::to_json(p, b)}, {"dim", dim}, {"basis", basis}});
      } else {
        e.line("dim Hom(" + io::format_object(p, a) + ", " + io::format_object(p, b) + ") = " + std::to_string(dim));
      }
    } else if (c_compose->parsed()) {
      const IndecObject a = io::parse_object(p, x), b = io::parse_object(p, y), c = io::parse_object(p, z);
      const Morphism g = compose(basis_mor(p, b, c), basis_mor(p, a, b));
      if (fmt == Format::Json) e.json(Json{{"morphism", io::to_json(g)}, {"zero", g.is_zero()}});
      else e.line(g.is_zero() ? "0" : "u(" + io::format_object(p, a) + " -> " + io::format_object(p, c) + ")");
    } else if (c_angle->parsed()) {
      emit_angle(e, min_angle(basis_mor(p, io::parse_object(p, x), io::parse_object(p, y))));
    } else if (c_chain[0]->parsed()) {
      emit_chain(e, d_kernel(chain_anchor(p, x, y)));
    } else if (c_chain[1]->parsed()) {
      emit_chain(e, d_cokernel(chain_anchor(p, x, y)));
    } else if (c_chain[2]->parsed()) {
      emit_chain(e, d_exact_seq(chain_anchor(p, x, y)));
    } else if (c_ar->parsed()) {
      const IndecObject a = io::parse_object(p, x);
      emit_angle(e, sub ? ar_angle_in(*sub, a) : ar_angle(p, a));
    } else if (c_cover->parsed()) {
      if (!sub) usage("cover needs --sub");
      const IndecObject a = io::parse_object(p, x);
      const CoverResult c = cover(*sub, a);
      const bool ok = !c.source.is_zero() && is_cover(*sub, c.mor);
      if (fmt == Format::Json)
        e.json(Json{{"target", io::to_json(p, a)},
                    {"source", io::to_json(p, c.source)},
                    {"morphism", io::to_json(c.mor)},
                    {"is_cover", ok}});
      else
        e.line(io::render_text(p, c.source) + " -> " + io::format_object(p, a));
    } else if (c_wide_list->parsed()) {
      const auto specs = enumerate_wide(p);
      if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& s : specs) arr.push_back(io::to_json(s));
        e.json(Json{{"params", io::to_json(p)}, {"count", specs.size()}, {"specs", std::move(arr)}});
      } else {
        for (const auto& s : specs) e.line(io::to_json(s).dump());
      }
    } else if (c_wide_check->parsed()) {
      const SubcatSpec s = io::parse_subcat(p, z);
      const bool wide = is_wide(s);
      if (fmt == Format::Json)
        e.json(Json{{"indices", io::to_json(s)},
                    {"wide", wide},
                    {"oracle", is_wide_oracle(s)},
                    {"semisimple", is_semisimple_wide(s)},
                    {"l_periodic", is_l_periodic(s)}});
      else
        e.line(wide ? "wide" : "not wide");
    } else if (c_verify->parsed()) {
      const SuiteReport r = run_suite(p, target);
      if (fmt == Format::Json) {
        e.json(io::to_json(r));
      } else {
        for (const auto& c : r.checks)
          e.line(std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
      }
      return r.pass() ? 0 : 1;
    } else if (is_quiver) {
      const Position lo = o_from->count() ? from : 1, hi = o_to->count() ? to : p.period();
      if (hi < lo) usage("--to must be >= --from");
      if (fmt == Format::Json) {
        Json nodes = Json::array(), edges = Json::array();
        for (Position q = lo; q <= hi; ++q) {
          const IndecObject n{q};
          Json node = io::to_json(p, n);
          node["label"] = io::node_label(p, n);
          node["member"] = sub.has_value() && sub->contains(n);
          nodes.push_back(std::move(node));
          if (q < hi) edges.push_back(Json::array({io::node_label(p, n), io::node_label(p, IndecObject{q + 1})}));
        }
        e.json(Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}});
      } else {
        out << io::quiver_dot(p, lo, hi, sub);
      }
    }
    return 0;
  } catch (const DomainError& ex) {
    err << Json{{"error", to_string(ex.kind())}, {"message", ex.what()}}.dump() << "\n";
    return exit_code(ex.kind());
  }
}

}  // namespace angcalc::cli
