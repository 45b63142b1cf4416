#include "holo/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/catalog.hpp"
#include "holo/doughnut.hpp"
#include "holo/errors.hpp"
#include "holo/packing.hpp"
#include "holo/render.hpp"
#include "holo/search.hpp"

namespace holo {

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kEmptySearch = 3;
constexpr int kDomainError = 4;

std::filesystem::path out_dir() {
  if (const char* env = std::getenv("HOLO_OUT_DIR")) return env;
  return ".";
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << data;
}

DiagramSpec load_spec(const std::string& name_or_path) {
  if (name_or_path.find('.') != std::string::npos ||
      std::filesystem::exists(name_or_path)) {
    std::ifstream f(name_or_path);
    if (!f) throw ParseError("cannot open spec file " + name_or_path);
    std::stringstream ss;
    ss << f.rdbuf();
    DiagramSpec spec = spec_from_json(ss.str());
    spec.validate();
    return spec;
  }
  return catalog(name_or_path);
}

}  // namespace

double parse_angle(const std::string& text) {
  auto ends_with = [&](const char* suffix) {
    size_t len = std::strlen(suffix);
    return text.size() > len && text.compare(text.size() - len, len, suffix) == 0;
  };
  auto number = [&](const std::string& head) {
    size_t used = 0;
    double v = std::stod(head, &used);
    if (used != head.size()) throw ParseError("trailing characters in angle '" + text + "'");
    return v;
  };
  try {
    if (ends_with("deg")) return number(text.substr(0, text.size() - 3)) * kTau / 360.0;
    if (ends_with("rad")) return number(text.substr(0, text.size() - 3));
    if (ends_with("tau")) {
      std::string head = text.substr(0, text.size() - 3);
      if (head.find('/') != std::string::npos) {
        return Rational::from_string(head).to_double() * kTau;  // exact fraction
      }
      return number(head) * kTau;
    }
    return number(text);  // bare radians
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse angle '" + text + "' (use deg, rad or tau suffixes)");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"triangle diagrams by holonomy: verification, doughnuts, search, packings"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for all randomized trials");

  // check
  auto* check = app.add_subcommand("check", "verify a diagram spec or catalog entry");
  std::string check_target, check_a, check_b, check_c, check_out, check_path;
  double check_tol = 1e-9;
  check->add_option("target", check_target, "spec.json path or catalog name")->required();
  check->add_option("--a", check_a)->required();
  check->add_option("--b", check_b)->required();
  check->add_option("--c", check_c)->required();
  check->add_option("--tol", check_tol, "normalized residual tolerance");
  check->add_option("--out", check_out, "json or svg payload");
  check->add_option("--out-path", check_path);

  // doughnut
  auto* dough = app.add_subcommand("doughnut", "build and develop an n-doughnut");
  int dough_n = 5;
  std::string dough_a, dough_b, dough_c, dough_out, dough_path;
  bool dough_fill = false;
  double dough_beta = -1, power_exponent = 0;
  int power_corner = -1;
  dough->add_option("--n", dough_n)->required();
  dough->add_option("--a", dough_a)->required();
  dough->add_option("--b", dough_b)->required();
  dough->add_option("--c", dough_c)->required();
  dough->add_flag("--fill", dough_fill, "attach the isosceles fill (n >= 5)");
  dough->add_option("--beta", dough_beta, "fill base angle in radians (default derived)");
  dough->add_option("--power-exponent", power_exponent, "render hole boundary raised to a power");
  dough->add_option("--power-corner", power_corner, "corner (0-2) used as the power center");
  dough->add_option("--out", dough_out, "svg or json");
  dough->add_option("--out-path", dough_path);

  // identity
  auto* ident = app.add_subcommand("identity", "cyclotomic identity residual on a grid");
  int ident_n = 3, ident_grid = 1000;
  ident->add_option("--n", ident_n)->required();
  ident->add_option("--grid", ident_grid);

  // asymptote
  auto* asym = app.add_subcommand("asymptote", "renormalized hole boundary vs the limit curve");
  std::string asym_angle = "1/4tau", asym_nlist = "10,20,40", asym_path;
  int asym_samples = 256;
  asym->add_option("--corner-angle", asym_angle);
  asym->add_option("--n-list", asym_nlist);
  asym->add_option("--samples", asym_samples, "limit curve export samples");
  asym->add_option("--out-path", asym_path);

  // search
  auto* search = app.add_subcommand("search", "exhaustive hole-fill search");
  int search_n = 4, search_num = 4, search_fill = 4;
  std::string search_policy = "no-interior-vertex", search_path;
  search->add_option("--n", search_n)->required();
  search->add_option("--max-num", search_num);
  search->add_option("--max-fill", search_fill);
  search->add_option("--policy", search_policy)
      ->check(CLI::IsMember({"no-interior-vertex", "single-interior-vertex"}));
  search->add_option("--out-path", search_path);

  // pack
  auto* pack = app.add_subcommand("pack", "exponential circle packing patch");
  double pack_s = 1.0, pack_t = 1.0;
  int pack_rows = 5, pack_cols = 5;
  std::string pack_out, pack_path;
  pack->add_option("--s", pack_s)->required();
  pack->add_option("--t", pack_t)->required();
  pack->add_option("--rows", pack_rows);
  pack->add_option("--cols", pack_cols);
  pack->add_option("--out", pack_out, "svg or json");
  pack->add_option("--out-path", pack_path);

  // flipbook
  auto* flip = app.add_subcommand("flipbook", "doughnut frames in decreasing n");
  int flip_from = 8, flip_to = 2;
  std::string flip_dir, flip_ratios = "4:3:2";
  bool flip_fill = false;
  flip->add_option("--from", flip_from);
  flip->add_option("--to", flip_to);
  flip->add_option("--out-dir", flip_dir);
  flip->add_option("--ratios", flip_ratios, "a:b:c proportions");
  flip->add_flag("--fill", flip_fill);

  std::vector<std::string> rev(args.rbegin(), args.rend());  // CLI11 wants reversed
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n" << app.help();
    return kBadInput;
  }

  try {
    if (*check) {
      Assignment asg{parse_angle(check_a), parse_angle(check_b), parse_angle(check_c)};
      DiagramSpec spec = load_spec(check_target);
      ExistenceReport rep = verify_existence(spec, asg, check_tol);
      out << (spec.metadata.name.empty() ? check_target : spec.metadata.name)
          << (rep.exists ? ": exists" : ": does not exist")
          << " (symbolic " << (rep.symbolic_ok ? "pass" : "fail") << ", residual "
          << rep.normalized_residual << " vs " << rep.tolerance << ")\n";
      if (check_out == "json") {
        auto path = check_path.empty() ? (out_dir() / "check.json").string() : check_path;
        write_file(path, report_to_json(rep) + "\n");
        out << "wrote " << path << "\n";
      } else if (check_out == "svg") {
        PlacedDiagram placed = develop(spec, asg);
        Scene scene;
        scene.add_placed(spec, placed);
        auto path = check_path.empty() ? (out_dir() / "check.svg").string() : check_path;
        write_file(path, to_svg(scene, RenderStyle{}));
        out << "wrote " << path << "\n";
      }
      return rep.exists ? kOk : kDomainError;
    }

    if (*dough) {
      Assignment asg{parse_angle(dough_a), parse_angle(dough_b), parse_angle(dough_c)};
      DiagramSpec spec = build_doughnut(dough_n);
      if (dough_fill) {
        spec = isosceles_fill(spec, dough_beta > 0 ? std::optional<double>(dough_beta)
                                                   : std::nullopt);
      }
      PlacedDiagram placed = develop(spec, asg);
      HolePolygon hole = hole_polygon(placed, spec);
      out << spec.metadata.name << ": residual " << placed.normalized_residual << ", hole ";
      if (hole.absent()) {
        out << "absent\n";
      } else {
        out << hole.vertices.size() << " vertices, area " << hole.area / hole.big_area
            << " of the enclosing triangle\n";
      }
      if (dough_out == "svg") {
        Scene scene;
        scene.add_placed(spec, placed);
        if (!hole.absent()) scene.add_polygon(hole.vertices, "hole");
        if (power_exponent > 0 && power_corner >= 0 && !hole.absent()) {
          const char* side_ids[3] = {"side-ab", "side-bc", "side-ca"};
          Point center = placed.placements[spec.triangle_index(side_ids[power_corner])][0];
          Scene bent;
          std::vector<Point> boundary = hole.vertices;
          boundary.push_back(boundary.front());
          bent.add_polygon(power_transform(boundary, power_exponent, center), "curve", false);
          auto path = dough_path.empty() ? (out_dir() / "doughnut-power.svg").string()
                                         : dough_path + ".power.svg";
          write_file(path, to_svg(bent, RenderStyle{}));
          out << "wrote " << path << "\n";
        }
        auto path = dough_path.empty()
                        ? (out_dir() / (spec.metadata.name + ".svg")).string()
                        : dough_path;
        write_file(path, to_svg(scene, RenderStyle{}));
        out << "wrote " << path << "\n";
      } else if (dough_out == "json") {
        nlohmann::ordered_json j;
        j["spec"] = nlohmann::ordered_json::parse(to_json(spec));
        j["residual"] = placed.normalized_residual;
        j["hole_vertices"] = hole.vertices.size();
        j["hole_area_ratio"] = hole.big_area > 0 ? hole.area / hole.big_area : 0.0;
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (auto p : hole.vertices) pts.push_back({p.real(), p.imag()});
        j["hole_polygon"] = pts;
        auto path = dough_path.empty()
                        ? (out_dir() / (spec.metadata.name + ".json")).string()
                        : dough_path;
        write_file(path, j.dump(2) + "\n");
        out << "wrote " << path << "\n";
      }
      return kOk;
    }

    if (*ident) {
      if (ident_n < 1 || ident_grid < 1) throw ParseError("identity needs n, grid >= 1");
      double worst = 0;
      for (int i = 1; i <= ident_grid; ++i) {
        double theta = (kTau / 2) * i / (ident_grid + 1.0);
        worst = std::max(worst, cyclotomic_residual(ident_n, theta));
      }
      out << "n=" << ident_n << " max residual " << worst << " over " << ident_grid
          << " grid points\n";
      return kOk;
    }

    if (*asym) {
      double A = parse_angle(asym_angle);
      std::vector<int> ns;
      std::stringstream ss(asym_nlist);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) ns.push_back(std::stoi(item));
      }
      if (ns.empty()) throw ParseError("empty --n-list");
      nlohmann::ordered_json j;
      j["corner_angle"] = A;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int n : ns) {
        double a = A / n;
        double rest = kTau / (2.0 * n) - a;
        if (rest <= 0) throw ParseError("corner angle too large for n=" + std::to_string(n));
        Assignment asg{a, rest / 2, rest / 2};
        BoundaryStudy study = renormalized_boundary(n, asg, 0);
        out << "n=" << n << " max distance to limit curve: " << study.max_distance << "\n";
        rows.push_back({{"n", n}, {"max_distance", study.max_distance}});
      }
      j["study"] = rows;
      nlohmann::ordered_json curve = nlohmann::ordered_json::array();
      for (Point p : limit_curve(A, asym_samples)) curve.push_back({p.real(), p.imag()});
      j["limit_curve"] = curve;
      auto path = asym_path.empty() ? (out_dir() / "asymptote.json").string() : asym_path;
      write_file(path, j.dump(2) + "\n");
      out << "wrote " << path << "\n";
      return kOk;
    }

    if (*search) {
      SearchBounds bounds;
      bounds.max_numerator = search_num;
      bounds.max_fill_triangles = search_fill;
      bounds.policy = search_policy == "single-interior-vertex"
                          ? TriangulationPolicy::kSingleInteriorVertex
                          : TriangulationPolicy::kNoInteriorVertex;
      SearchResult res = search_hole_fill(search_n, bounds, seed);
      out << "examined " << res.candidates_examined << " candidates, found "
          << res.solutions.size() << " solutions\n";
      auto path = search_path.empty() ? (out_dir() / "search.json").string() : search_path;
      write_file(path, search_result_to_json(res) + "\n");
      out << "wrote " << path << "\n";
      return res.solutions.empty() ? kEmptySearch : kOk;
    }

    if (*pack) {
      PackingParams params{pack_s, pack_t, pack_rows, pack_cols};
      PackedPatch patch = develop_packing(params);
      out << "packing " << pack_rows << "x" << pack_cols << ": tangency residual "
          << patch.max_tangency_residual << ", vertex residual "
          << patch.max_vertex_angle_residual << "\n";
      if (pack_out == "svg") {
        Scene scene;
        scene.add_circles(patch.circles());
        auto path = pack_path.empty() ? (out_dir() / "packing.svg").string() : pack_path;
        write_file(path, to_svg(scene, RenderStyle{}));
        out << "wrote " << path << "\n";
      } else {
        auto path = pack_path.empty() ? (out_dir() / "packing.json").string() : pack_path;
        write_file(path, packing_to_json(patch) + "\n");
        out << "wrote " << path << "\n";
      }
      return kOk;
    }

    if (*flip) {
      FlipbookPolicy policy;
      policy.fill = flip_fill;
      {
        std::stringstream ss(flip_ratios);
        std::string item;
        std::vector<double> parts;
        while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
        if (parts.size() != 3) throw ParseError("--ratios wants a:b:c");
        policy.ratio_a = parts[0];
        policy.ratio_b = parts[1];
        policy.ratio_c = parts[2];
      }
      auto frames = flipbook(flip_from, flip_to, policy, RenderStyle{});
      std::filesystem::path dir = flip_dir.empty() ? out_dir() : std::filesystem::path(flip_dir);
      std::filesystem::create_directories(dir);
      int written = 0;
      for (const auto& frame : frames) {
        if (!frame.error.empty()) {
          err << "frame n=" << frame.n << " skipped: " << frame.error << "\n";
          continue;
        }
        char name[32];
        std::snprintf(name, sizeof(name), "flip-%02d.svg", frame.n);
        write_file(dir / name, frame.svg);
        ++written;
      }
      out << "wrote " << written << " frames to " << dir.string() << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace holo
