#include "angcalc/io.hpp"

#include <charconv>
#include <sstream>

namespace angcalc::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw DomainError(ErrorKind::ParseError, what); }

std::int64_t to_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) parse_fail("malformed object '" + std::string(whole) + "'");
  return v;
}

}  // namespace

IndecObject parse_object(const FamilyParams& p, std::string_view text) {
  if (text.size() >= 2 && text[0] == 'p') return IndecObject{to_int(text.substr(1), text)};
  std::int64_t shift = 0;
  std::string_view rest = text;
  if (!rest.empty() && rest[0] == 's') {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) parse_fail("malformed object '" + std::string(text) + "'");
    shift = to_int(rest.substr(1, colon - 1), text);
    rest = rest.substr(colon + 1);
  }
  if (rest.size() < 2 || rest[0] != 'f') parse_fail("malformed object '" + std::string(text) + "'");
  const auto index = to_int(rest.substr(1), text);
  if (index < 1 || index > p.period())
    parse_fail("index in '" + std::string(text) + "' outside [1, " + std::to_string(p.period()) + "]");
  return make_object(p, shift, static_cast<int>(index));
}

std::string format_object(const FamilyParams& p, IndecObject x) {
  const auto s = shift_of(p, x);
  const std::string f = "f" + std::to_string(index_of(p, x));
  return s == 0 ? f : "s" + std::to_string(s) + ":" + f;
}

std::string node_label(const FamilyParams& p, IndecObject x) {
  return "s" + std::to_string(shift_of(p, x)) + "_f" + std::to_string(index_of(p, x));
}

SubcatSpec parse_subcat(const FamilyParams& p, std::string_view text) {
  std::vector<int> idx;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto token = text.substr(start, comma - start);
    idx.push_back(static_cast<int>(to_int(token, text)));
    start = comma + 1;
  }
  return SubcatSpec(p, std::move(idx));
}

Json to_json(const FamilyParams& p) {
  return Json{{"d", p.d()}, {"l", p.l()}, {"m", p.m()}, {"period", p.period()}};
}

Json to_json(const FamilyParams& p, IndecObject x) {
  return Json{{"shift", shift_of(p, x)}, {"index", index_of(p, x)}};
}

Json to_json(const FamilyParams& p, const SumObject& x) {
  Json arr = Json::array();
  for (auto y : x) arr.push_back(to_json(p, y));
  return arr;
}

Json entries_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Morphism& f) {
  const auto& p = f.params();
  return Json{{"source", to_json(p, f.source())}, {"target", to_json(p, f.target())}, {"entries", entries_json(f.entries())}};
}

Json to_json(const Angle& a) {
  const auto& p = a.params();
  Json objects = Json::array();
  for (const auto& x : a.objects()) objects.push_back(to_json(p, x));
  Json maps = Json::array();
  for (const auto& f : a.maps()) maps.push_back(Json{{"entries", entries_json(f.entries())}});
  return Json{{"params", to_json(p)}, {"objects", std::move(objects)}, {"maps", std::move(maps)}};
}

Json to_json(const FLevelChain& c) {
  const auto& p = c.anchor.params();
  const char* kind = c.kind == ChainKind::Kernel ? "d-kernel" : c.kind == ChainKind::Cokernel ? "d-cokernel" : "d-exact";
  Json objects = Json::array();
  for (const auto& x : c.objects) objects.push_back(to_json(p, x));
  Json maps = Json::array();
  for (const auto& f : c.maps) maps.push_back(Json{{"entries", entries_json(f.entries())}});
  return Json{{"params", to_json(p)},
              {"kind", kind},
              {"morphism", to_json(c.anchor)},
              {"objects", std::move(objects)},
              {"maps", std::move(maps)},
              {"exact", check_flevel_exactness(c).pass}};
}

Json to_json(const ExactnessReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"variance", f.variance == Variance::Covariant ? "covariant" : "contravariant"},
                            {"test_pos", f.test_pos},
                            {"slot", f.slot},
                            {"dim", f.dim},
                            {"rank_in", f.rank_in},
                            {"rank_out", f.rank_out},
                            {"composite_nonzero", f.composite_nonzero}});
  return Json{{"pass", r.pass}, {"checks", r.checks}, {"failures", std::move(failures)}};
}

Json to_json(const SubcatSpec& s) { return Json(s.indices()); }

Json to_json(const TheoremBReport& r) {
  const auto& p = r.ambient.params();
  return Json{{"target", to_json(p, r.target)},
              {"ambient", to_json(r.ambient)},
              {"hypothesis", r.hypothesis},
              {"cover_source", to_json(p, r.head_cover.source)},
              {"cover_side", r.cover_side},
              {"subcategory_angle", to_json(r.sub_angle)},
              {"angle_side", r.angle_side},
              {"heads_agree", r.heads_agree},
              {"pass", r.pass}};
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"target", r.target}, {"pass", r.pass()}, {"checks", std::move(checks)}};
}

FamilyParams params_from_json(const Json& j) {
  try {
    const auto p = validate_params(j.at("d").get<int>(), j.at("l").get<int>(), j.at("m").get<int>());
    if (j.contains("period") && j.at("period").get<int>() != p.period()) parse_fail("period does not match d, l, m");
    return p;
  } catch (const Json::exception& e) {
    parse_fail(std::string("bad params document: ") + e.what());
  }
}

namespace {

SumObject sum_from_json(const FamilyParams& p, const Json& arr) {
  std::vector<IndecObject> out;
  for (const auto& o : arr) out.push_back(make_object(p, o.at("shift").get<std::int64_t>(), o.at("index").get<int>()));
  return SumObject(std::move(out));
}

Matrix matrix_from_json(const Json& rows, std::size_t nrows, std::size_t ncols) {
  if (rows.size() != nrows) parse_fail("entries have the wrong number of rows");
  Matrix m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].size() != ncols) parse_fail("entries have the wrong number of columns");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = parse_rational(rows[r][c].get<std::string>());
  }
  return m;
}

}  // namespace

Angle angle_from_json(const Json& j) {
  try {
    const auto p = params_from_json(j.at("params"));
    std::vector<SumObject> objects;
    for (const auto& slot : j.at("objects")) objects.push_back(sum_from_json(p, slot));
    const auto& maps_json = j.at("maps");
    if (objects.empty() || maps_json.size() != objects.size()) parse_fail("objects and maps must have equal length");
    std::vector<Morphism> maps;
    for (std::size_t k = 0; k < objects.size(); ++k) {
      const SumObject& src = objects[k];
      const SumObject dst = k + 1 < objects.size() ? objects[k + 1] : shift(p, objects[0], 1);
      maps.emplace_back(p, src, dst, matrix_from_json(maps_json[k].at("entries"), dst.size(), src.size()));
    }
    return Angle(p, std::move(objects), std::move(maps));
  } catch (const Json::exception& e) {
    parse_fail(std::string("bad angle document: ") + e.what());
  }
}

std::string render_text(const FamilyParams& p, const SumObject& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "+" : "") + format_object(p, x[i]);
  return out;
}

std::string render_text(const Angle& a) {
  std::string out;
  for (const auto& x : a.objects()) out += render_text(a.params(), x) + " -> ";
  return out + render_text(a.params(), a.closing_object());
}

std::string quiver_dot(const FamilyParams& p, Position from, Position to, const std::optional<SubcatSpec>& sub) {
  std::ostringstream os;
  os << "digraph quiver {\n  rankdir=LR;\n";
  for (Position q = from; q <= to; ++q) {
    const IndecObject x{q};
    os << "  \"" << node_label(p, x) << "\" [label=\"" << format_object(p, x) << "\"";
    if (sub && sub->contains(x)) os << ", member=true, style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (Position q = from; q < to; ++q)
    os << "  \"" << node_label(p, IndecObject{q}) << "\" -> \"" << node_label(p, IndecObject{q + 1}) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace angcalc::io
