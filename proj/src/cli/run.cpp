#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "frobring/cli.hpp"
#include "frobring/error.hpp"
#include "frobring/quadratic_ring.hpp"
#include "frobring/semigroup.hpp"
#include "frobring/shifted.hpp"
#include "frobring/vector_template.hpp"

namespace frob::cli {

namespace {

using Json = nlohmann::ordered_json;

// Comma-separated fields of one generator token.
std::vector<std::string> split_fields(const std::string& token) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(token);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!token.empty() && token.back() == ',') out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + text + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_int_tuple(const std::string& token, std::size_t arity) {
  const auto fields = split_fields(token);
  if (arity != 0 && fields.size() != arity) {
    throw Error(ErrorKind::InvalidArgument, "generator '" + token + "' needs " +
                                                std::to_string(arity) + " comma-separated values");
  }
  std::vector<std::int64_t> out;
  for (const auto& f : fields) out.push_back(parse_int(f));
  return out;
}

// One-dimensional templates accept "3,5" as well as "3 5".
std::vector<std::int64_t> parse_scalars(const std::vector<std::string>& tokens) {
  std::vector<std::int64_t> out;
  for (const auto& t : tokens) {
    for (std::int64_t v : parse_int_tuple(t, 0)) out.push_back(v);
  }
  return out;
}

Json rational_json(const Rational& q) { return to_string(q); }

void write_svg(const std::string& path, const std::string& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open SVG output '" + path + "'");
  out << doc;
}

Viewport pick_viewport(const RunRequest& req, const std::vector<std::pair<Rational, Rational>>& corners) {
  if (!req.viewport) return default_viewport(corners);
  const auto fields = split_fields(*req.viewport);
  if (fields.size() != 2) throw Error(ErrorKind::InvalidArgument, "--viewport expects W,H");
  return {parse_rational(fields[0]), parse_rational(fields[1])};
}

Json run_classical(const RunRequest& req, std::ostringstream& text) {
  const GeneratorList gens(parse_scalars(req.gens));
  Json input{{"gens", std::vector<std::int64_t>(gens.values().begin(), gens.values().end())}};
  Json result;
  const std::int64_t g = gcd_list(gens);
  result["empty"] = g != 1;
  result["gcd"] = g;
  if (g == 1) {
    const auto chi = conductor(gens).value;
    result["corner"] = chi;
    text << "Frob = " << chi << " + N\n";
  } else {
    text << "Frob is empty (gcd " << g << ")\n";
  }
  if (req.apery_modulus) {
    input["apery"] = *req.apery_modulus;
    result["apery"] = apery_set(gens, *req.apery_modulus);
  }
  return Json{{"template", "classical"}, {"input", input}, {"result", result}};
}

Json run_shifted(const RunRequest& req, std::ostringstream& text) {
  const ShiftedTemplate t(GeneratorList(parse_scalars(req.gens)), req.shift);
  const auto values = t.gens.values();
  Json input{{"gens", std::vector<std::int64_t>(values.begin(), values.end())}, {"shift", t.shift}};
  Json result;
  const bool empty = gcd_list(t.gens) != 1;
  result["empty"] = empty;
  if (!empty) {
    const auto chi = conductor_shifted(t).value;
    result["corner"] = chi;
    result["bound"] = shifted_ray_bound(t);
    Json formula = nullptr;
    if (values.size() == 2) {
      if (auto f = conductor_shifted_formula(values[0], values[1], t.shift)) formula = f->value;
    }
    result["formula"] = formula;
    text << "Frob = " << chi << " + N\n";
  } else {
    text << "Frob is empty\n";
  }
  return Json{{"template", "shifted"}, {"input", input}, {"result", result}};
}

Json run_dual(const RunRequest& req, SearchBudget& budget, std::ostringstream& text) {
  std::vector<DualGenerator> gens;
  Json in_gens = Json::array();
  for (const auto& tok : req.gens) {
    const auto v = parse_int_tuple(tok, 2);
    gens.emplace_back(v[0], v[1]);
    in_gens.push_back({v[0], v[1]});
  }
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "--gens needs at least one generator");
  Json input{{"gens", in_gens}};
  Json result;
  const auto stairs = frob_staircase(gens, budget);
  result["empty"] = !stairs.has_value();
  Json corners = Json::array();
  if (stairs) {
    text << "Frob =";
    const char* sep = " ";
    for (const Point2& p : stairs->corners()) {
      corners.push_back({p.t, p.u});
      text << sep << "((" << p.t << ", " << p.u << ") + N^2)";
      sep = " u ";
    }
    text << '\n';
  } else {
    text << "Frob is empty\n";
  }
  result["corners"] = corners;
  if (req.point) {
    const auto v = parse_int_tuple(*req.point, 2);
    const Point2 p{v[0], v[1]};
    input["point"] = {p.t, p.u};
    result["point_in_frob"] = frob_membership_dual(p, gens, budget);
  }
  if (req.svg_path) {
    if (!stairs) throw Error(ErrorKind::EmptySet, "nothing to render: the set is empty");
    std::vector<std::pair<Rational, Rational>> pts;
    for (const Point2& p : stairs->corners()) pts.emplace_back(Rational(p.t), Rational(p.u));
    write_svg(*req.svg_path, render_svg(*stairs, pick_viewport(req, pts)));
  }
  return Json{{"template", "dual"}, {"input", input}, {"result", result}};
}

Json run_dual_real(const RunRequest& req, std::ostringstream& text) {
  if (req.gens.size() != 2) {
    throw Error(ErrorKind::Unsupported, "dual-real needs exactly two generators, got " +
                                            std::to_string(req.gens.size()));
  }
  std::vector<DualGenQ> gens;
  Json in_gens = Json::array();
  for (const auto& tok : req.gens) {
    const auto fields = split_fields(tok);
    if (fields.size() != 2) throw Error(ErrorKind::InvalidArgument, "generator '" + tok + "' needs a,b");
    gens.emplace_back(parse_rational(fields[0]), parse_rational(fields[1]));
    in_gens.push_back({rational_json(gens.back().a), rational_json(gens.back().b)});
  }
  const QuadrantRegion region = frob_region(gens);
  Json corners = Json::array();
  text << "Frob =";
  const char* sep = " ";
  for (const QPoint& q : region.corners()) {
    corners.push_back({rational_json(q.f), rational_json(q.g)});
    text << sep << "((" << to_string(q.f) << ", " << to_string(q.g) << ") + [0,inf)^2)";
    sep = " u ";
  }
  text << '\n';
  Json result{{"empty", false},
              {"case", std::string(to_string(classify_region(gens[0], gens[1])))},
              {"corners", corners}};
  Json input{{"gens", in_gens}};
  if (req.point) {
    const auto fields = split_fields(*req.point);
    if (fields.size() != 2) throw Error(ErrorKind::InvalidArgument, "--point expects f,g");
    const QPoint p{parse_rational(fields[0]), parse_rational(fields[1])};
    input["point"] = {rational_json(p.f), rational_json(p.g)};
    result["point_in_mn"] = is_member_dual_real(p, gens[0], gens[1]);
  }
  if (req.svg_path) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const QPoint& q : region.corners()) pts.emplace_back(q.f, q.g);
    write_svg(*req.svg_path, render_svg(region, pick_viewport(req, pts)));
  }
  return Json{{"template", "dual-real"}, {"input", input}, {"result", result}};
}

Json run_vector(const RunRequest& req, SearchBudget& budget, std::ostringstream& text) {
  if (req.dim == 0) throw Error(ErrorKind::InvalidArgument, "--dim must be >= 1");
  std::vector<VecGen> gens;
  Json in_gens = Json::array();
  for (const auto& tok : req.gens) {
    auto v = parse_int_tuple(tok, 0);
    if (v.size() != req.dim) {
      throw Error(ErrorKind::DimensionMismatch, "generator '" + tok + "' has " +
                                                    std::to_string(v.size()) + " entries, expected " +
                                                    std::to_string(req.dim));
    }
    in_gens.push_back(v);
    gens.push_back({std::move(v)});
  }
  Json input{{"dim", req.dim}, {"gens", in_gens}};
  const auto corner = frob_vector_corner(gens, req.dim);
  Json result{{"empty", !corner.has_value()}};
  if (corner) {
    result["corner"] = corner->entries;
    text << "Frob = (";
    for (std::size_t i = 0; i < corner->entries.size(); ++i) {
      text << (i ? ", " : "") << corner->entries[i];
    }
    text << ") + N^" << req.dim << '\n';
  } else {
    text << "Frob is empty\n";
  }
  if (req.point) {
    const auto v = parse_int_tuple(*req.point, req.dim);
    input["point"] = v;
    result["point_in_mn"] = is_member_vector({v}, gens, budget);
  }
  return Json{{"template", "vector"}, {"input", input}, {"result", result}};
}

Json quad_json(const QuadraticInt& q) { return Json{{"x", q.x()}, {"y", q.y()}, {"m", q.m()}}; }

Json run_quad(const RunRequest& req, std::ostringstream& text) {
  std::vector<QuadraticInt> alphas;
  Json in_gens = Json::array();
  for (const auto& tok : req.gens) {
    const auto v = parse_int_tuple(tok, 2);
    alphas.emplace_back(v[0], v[1], req.m);
    in_gens.push_back(quad_json(alphas.back()));
  }
  if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "--gens needs at least one generator");
  Json input{{"m", req.m}, {"gens", in_gens}};
  const bool spans = spans_unity(alphas);
  const bool nonempty = looper_nonempty(alphas);
  Json result{{"empty", !nonempty}, {"spans_unity", spans}};

  // Closed forms: every generator on an axis, or a pair.
  std::optional<QuadraticCorner> corner;
  std::string rule;
  const bool axis = std::all_of(alphas.begin(), alphas.end(),
                                [](const QuadraticInt& a) { return a.x() == 0 || a.y() == 0; });
  if (axis) {
    std::vector<std::int64_t> as, bs;
    for (const auto& a : alphas) {
      if (a.y() == 0) {
        as.push_back(a.x());
      } else {
        bs.push_back(a.y());
      }
    }
    corner = frob_corner_axis_list(as, bs, req.m);
    rule = "axis-list";
  } else if (alphas.size() == 2) {
    corner = frob_corner_pair_sqrt(alphas[0], alphas[1]);
    rule = "pair";
  }
  if (corner) {
    result["corner"] = quad_json(corner->corner);
    result["rule"] = rule;
    text << "Frob = " << corner->corner.x() << " + " << corner->corner.y() << " sqrt(" << req.m
         << ") + N[sqrt(" << req.m << ")]\n";
  } else {
    result["corner"] = nullptr;
    text << (nonempty ? "Frob is nonempty; no closed form for this list\n" : "Frob is empty\n");
  }
  return Json{{"template", "quad"}, {"input", input}, {"result", result}};
}

void text_header(std::ostringstream& text, const Json& doc) {
  text << "template: " << doc["template"].get<std::string>() << '\n';
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult res;
  RunRequest req;
  CLI::App app{"Frobenius sets for generalized coin-problem templates", "frobring"};
  app.require_subcommand(1);
  std::string output = "json";

  auto common = [&](CLI::App* sub, bool svg) {
    sub->add_option("--gens", req.gens, "generators: comma-separated coordinates, space-separated generators")
        ->required()
        ->expected(1, -1)
        ->allow_extra_args();
    sub->add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
    if (svg) {
      sub->add_option("--svg", req.svg_path, "write an SVG rendering of the Frobenius set");
      sub->add_option("--viewport", req.viewport, "SVG box W,H (default: corners + 5)");
    }
  };

  auto* classical = app.add_subcommand("classical", "template (N, N, N): conductor of a numerical semigroup");
  common(classical, false);
  classical->add_option("--apery", req.apery_modulus, "also report the Apery set for this generator");

  auto* shifted = app.add_subcommand("shifted", "coefficients restricted to {0} u (n + N)");
  common(shifted, false);
  shifted->add_option("--shift", req.shift, "coefficient shift n >= 1")->required();

  auto* dual = app.add_subcommand("dual", "dual numbers over Z: staircase of minimal corners");
  common(dual, true);
  dual->add_option("--point", req.point, "also decide t,u + N^2 inside MN");

  auto* dual_real = app.add_subcommand("dual-real", "dual numbers over Q, scalars in {0} u [1, inf)");
  common(dual_real, true);
  dual_real->add_option("--point", req.point, "also decide membership of f,g in MN");

  auto* vector = app.add_subcommand("vector", "N^m with upper-triangular matrix coefficients");
  common(vector, false);
  vector->add_option("--dim", req.dim, "vector dimension m")->required();
  vector->add_option("--point", req.point, "also decide membership of a vector in MN");

  auto* quad = app.add_subcommand("quad", "Z[sqrt m] templates");
  common(quad, false);
  quad->add_option("--m", req.m, "non-square radicand m >= 2")->required();

  std::vector<std::string> argv_store{"frobring"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? 0 : 2;
    return res;
  }

  if (classical->parsed()) req.subcommand = Subcommand::Classical;
  if (shifted->parsed()) req.subcommand = Subcommand::Shifted;
  if (dual->parsed()) req.subcommand = Subcommand::Dual;
  if (dual_real->parsed()) req.subcommand = Subcommand::DualReal;
  if (vector->parsed()) req.subcommand = Subcommand::Vector;
  if (quad->parsed()) req.subcommand = Subcommand::Quad;
  req.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;

  try {
    SearchBudget budget(SearchBudget::limit_from_env());
    std::ostringstream text;
    Json doc;
    switch (req.subcommand) {
      case Subcommand::Classical: doc = run_classical(req, text); break;
      case Subcommand::Shifted: doc = run_shifted(req, text); break;
      case Subcommand::Dual: doc = run_dual(req, budget, text); break;
      case Subcommand::DualReal: doc = run_dual_real(req, text); break;
      case Subcommand::Vector: doc = run_vector(req, budget, text); break;
      case Subcommand::Quad: doc = run_quad(req, text); break;
    }
    if (req.output == OutputFormat::Json) {
      out << doc.dump(2) << '\n';
    } else {
      std::ostringstream full;
      text_header(full, doc);
      full << text.str();
      out << full.str();
    }
    res.exit_code = 0;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) {
      err << "search budget exceeded\n";
      res.exit_code = 3;
    } else {
      err << "error: " << e.what() << '\n';
      res.exit_code = 2;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    res.exit_code = 1;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace frob::cli
