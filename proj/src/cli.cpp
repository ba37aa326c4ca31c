#include "lamkit/cli.hpp"

#include "lamkit/io.hpp"
#include "lamkit/render.hpp"

#include <CLI11.hpp>

namespace lamkit {

namespace {

constexpr int kUsage = 64;

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Member: return 0;
    case Verdict::NonMember: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 1;
}

struct Options {
  int degree = 3;
  int depth = 4;
  int period = 3;
  int period_bound = 0;
  std::string angle;
  std::string gap;
  std::string critical;
  std::string major;
  std::string vertices;
  std::string rotation;
  std::string quadratic;
  std::string side = "B";
  std::string policy = "edges";
  std::string input;
  std::string svg;
  int size = 800;
  double stroke = 0.6;
  bool straight = false;
  bool fill_gaps = false;
  bool no_background = false;
  std::vector<std::string> highlight;
};

QuadGap gap_from(const Options& o) {
  if (!o.critical.empty()) return build_quad_gap(CriticalChord::parse(o.critical));
  if (!o.major.empty()) return QuadGap::from_major(Chord::parse(o.major));
  if (!o.gap.empty()) return parse_gap(o.gap);
  throw CLI::ValidationError("gap", "one of --gap, --critical or --major is required");
}

RenderSpec render_spec(const Options& o) {
  RenderSpec r;
  r.size = o.size;
  r.stroke_width = o.stroke;
  r.style = o.straight ? GeodesicStyle::Straight : GeodesicStyle::Hyperbolic;
  r.highlight = o.highlight;
  r.background = !o.no_background;
  r.fill_gaps = o.fill_gaps;
  return r;
}

int emit(const CertifiedSlice& cs, const Options& o, std::ostream& out) {
  if (!o.svg.empty()) {
    write_text_file(o.svg, render_svg(cs, render_spec(o)));
    json j;
    j["svg"] = o.svg;
    j["leaves"] = cs.slice.size();
    out << j.dump() << "\n";
  } else {
    out << to_json(cs).dump(2) << "\n";
  }
  return 0;
}

LaminationSlice quadratic_from(const std::string& text, int depth) {
  if (text.find('/') != std::string::npos && text.find(".json") == std::string::npos)
    return canonical_quadratic(Angle::parse(text).value(), depth);
  if (text == "0" || text == "empty") return canonical_quadratic(0, depth);
  return slice_from_json(read_json_file(text));
}

void add_render_flags(CLI::App* c, Options& o) {
  c->add_option("--svg", o.svg, "write an SVG picture instead of JSON");
  c->add_option("--size", o.size, "canvas size in pixels")->check(CLI::PositiveNumber);
  c->add_option("--stroke", o.stroke, "leaf stroke width")->check(CLI::PositiveNumber);
  c->add_flag("--straight", o.straight, "straight chords instead of geodesics");
  c->add_flag("--fill-gaps", o.fill_gaps, "shade alternate complementary regions");
  c->add_flag("--no-background", o.no_background, "transparent background");
  c->add_option("--highlight", o.highlight, "metadata labels to draw in colour");
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant laminations of the circle under angle tripling"};
  app.name("lamkit");
  app.require_subcommand(1);
  Options o;
  std::function<int()> run;

  auto* orbit = app.add_subcommand("orbit", "preperiod, period and orbit of an angle");
  orbit->add_option("--degree", o.degree)->check(CLI::Range(2, 64));
  orbit->add_option("--angle", o.angle)->required();
  orbit->callback([&] {
    run = [&] {
      auto info = orbit_info(o.degree, Angle::parse(o.angle));
      json j;
      j["preperiod"] = info.preperiod;
      j["period"] = info.period;
      json a = json::array();
      for (const auto& x : info.orbit) a.push_back(x.str());
      j["orbit"] = a;
      out << j.dump() << "\n";
      return 0;
    };
  });

  auto* gap = app.add_subcommand("gap", "invariant quadratic gap and its edges");
  for (auto* c : {gap}) {
    c->add_option("--gap", o.gap, "Fa, Fb, a critical chord or a periodic major");
    c->add_option("--critical", o.critical, "critical chord p/q-r/s");
    c->add_option("--major", o.major, "periodic-type major p/q-r/s");
    c->add_option("--depth", o.depth)->check(CLI::Range(0, 14));
  }
  gap->callback([&] {
    run = [&] {
      QuadGap u = gap_from(o);
      json j = to_json(u, o.depth);
      if (u.seed) j["classification"] = to_string(classify_critical_chord(*u.seed).kind);
      out << j.dump(2) << "\n";
      return 0;
    };
  });

  auto* vas = app.add_subcommand("vassal", "vassal cycle of a periodic-type gap");
  vas->add_option("--gap", o.gap)->required();
  vas->add_option("--depth", o.depth)->check(CLI::Range(0, 14));
  vas->callback([&] {
    run = [&] {
      auto v = vassal(parse_gap(o.gap), o.depth);
      json j;
      j["owner"] = v.owner.label();
      j["period"] = v.period;
      j["a2"] = v.a2.str();
      j["b2"] = v.b2.str();
      json s = json::array(), e = json::array();
      for (int i = 0; i < v.cycle.period(); ++i) s.push_back(v.cycle.support(i).str());
      for (const auto& x : v.edges) e.push_back(x.chord.str());
      j["supports"] = s;
      j["edges"] = e;
      out << j.dump(2) << "\n";
      return 0;
    };
  });

  auto* cat = app.add_subcommand("caterpillar", "caterpillar gap hanging off a periodic major");
  cat->add_option("--gap", o.gap)->required();
  cat->add_option("--side", o.side)->check(CLI::IsMember({"A", "B"}));
  cat->add_option("--depth", o.depth)->check(CLI::Range(0, 30));
  cat->callback([&] {
    run = [&] {
      auto g = caterpillar_edges(parse_gap(o.gap), o.side == "A" ? Side::A : Side::B, o.depth);
      json j;
      j["head"] = g.head.str();
      j["critical_edge"] = g.critical_edge.str();
      json e = json::array();
      for (const auto& c : g.edges) e.push_back(c.str());
      j["edges"] = e;
      out << j.dump(2) << "\n";
      return 0;
    };
  });

  auto* rot = app.add_subcommand("rotational", "rotational sets");
  rot->require_subcommand(1);
  auto* rlist = rot->add_subcommand("list", "all rotational sets of one period");
  rlist->add_option("--degree", o.degree)->check(CLI::Range(2, 5));
  rlist->add_option("--period", o.period)->check(CLI::Range(1, 8));
  rlist->callback([&] {
    run = [&] {
      json a = json::array();
      for (const auto& g : rotational_sets(o.degree, o.period)) a.push_back(to_json(g));
      out << a.dump(2) << "\n";
      return 0;
    };
  });
  auto* rcls = rot->add_subcommand("classify", "type of a rotational set");
  rcls->add_option("--vertices", o.vertices)->required();
  rcls->add_option("--degree", o.degree)->check(CLI::Range(2, 5));
  rcls->callback([&] {
    run = [&] {
      auto g = rotational_set_from_vertices(parse_angle_list(o.vertices), o.degree);
      out << to_json(g).dump() << "\n";
      return 0;
    };
  });

  auto* can = app.add_subcommand("canonical", "canonical laminations");
  can->require_subcommand(1);
  auto* cq = can->add_subcommand("quadgap", "canonical lamination of a quadratic gap");
  cq->add_option("--gap", o.gap);
  cq->add_option("--critical", o.critical);
  cq->add_option("--major", o.major);
  auto* cr = can->add_subcommand("rotational", "canonical lamination of a rotational set");
  cr->add_option("--vertices", o.vertices)->required();
  cr->add_option("--policy", o.policy, "edges or closure")->check(CLI::IsMember({"edges", "closure"}));
  auto* c2 = can->add_subcommand("quadratic", "canonical sigma_2 lamination");
  c2->add_option("--rotation", o.rotation, "p/q, or 0 for the empty lamination")->required();
  for (auto* c : {cq, cr, c2}) {
    c->add_option("--depth", o.depth)->check(CLI::Range(0, 14));
    add_render_flags(c, o);
  }
  cq->callback([&] { run = [&] { return emit(certify_quadgap(gap_from(o), o.depth), o, out); }; });
  cr->callback([&] {
    run = [&] {
      auto g = rotational_set_from_vertices(parse_angle_list(o.vertices), 3);
      CertifiedSlice cs = certify_rotational(g, o.depth);
      if (o.policy == "closure")
        cs.slice = canonical_lam_rotational(g, o.depth, SharedVertexPolicy::Closure);
      return emit(cs, o, out);
    };
  });
  c2->callback([&] {
    run = [&] {
      CertifiedSlice cs;
      cs.slice = quadratic_from(o.rotation == "0" ? "0" : o.rotation, o.depth);
      return emit(cs, o, out);
    };
  });

  auto* tun = app.add_subcommand("tune", "tune a quadratic gap by a sigma_2 lamination");
  tun->add_option("--gap", o.gap, "Fa, Fb, a critical chord or a periodic major")->required();
  tun->add_option("--quadratic", o.quadratic, "rotation p/q, 0, or a slice JSON file")->required();
  tun->add_option("--depth", o.depth)->check(CLI::Range(0, 12));
  add_render_flags(tun, o);
  tun->callback([&] {
    run = [&] {
      auto q = quadratic_from(o.quadratic, o.depth);
      return emit(tune(parse_gap(o.gap), q, o.depth), o, out);
    };
  });

  auto* cub = app.add_subcommand("cubioid", "cubioid membership and witnesses");
  cub->require_subcommand(1);
  auto* chk = cub->add_subcommand("check", "cubioid and periodic-leaf predicates");
  auto* wit = cub->add_subcommand("witness", "quadratic gap whose projection is a cardioid member");
  for (auto* c : {chk, wit}) {
    c->add_option("slice", o.input, "slice JSON with metadata")->required()->check(CLI::ExistingFile);
    c->add_option("--period-bound", o.period_bound, "largest period searched")->check(CLI::NonNegativeNumber);
  }
  chk->callback([&] {
    run = [&] {
      auto cs = certified_from_json(read_json_file(o.input));
      auto a = is_cubioid_member(cs, o.period_bound), b = corollary_check(cs, o.period_bound);
      json j;
      j["cubioid"] = to_json(a);
      j["periodic_leaves"] = to_json(b);
      out << j.dump(2) << "\n";
      return std::max(verdict_code(a.verdict), verdict_code(b.verdict));
    };
  });
  wit->callback([&] {
    run = [&] {
      auto cs = certified_from_json(read_json_file(o.input));
      auto w = main_theorem_witness(cs);
      json j;
      j["gap"] = to_json(w.gap, 0);
      j["case"] = w.theorem_case;
      j["source"] = w.source;
      j["projected"] = to_json(w.projected);
      j["cardioid"] = to_json(car_membership(w.projected, {}, o.period_bound));
      out << j.dump(2) << "\n";
      return 0;
    };
  });

  auto* ren = app.add_subcommand("render", "draw a slice JSON file as SVG");
  ren->add_option("slice", o.input)->required()->check(CLI::ExistingFile);
  add_render_flags(ren, o);
  ren->get_option("--svg")->required();
  ren->callback([&] {
    run = [&] { return emit(certified_from_json(read_json_file(o.input)), o, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lamkit: " << e.what() << "\n";
    return kUsage;
  }
  try {
    return run ? run() : kUsage;
  } catch (const CLI::ValidationError& e) {
    err << "lamkit: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "lamkit: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lamkit
