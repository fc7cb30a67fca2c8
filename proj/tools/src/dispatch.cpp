#include "vk/cli/dispatch.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "vk/cli/serialize.hpp"
#include "vk/error.hpp"

namespace vk::cli {

namespace {

constexpr std::size_t text_presentation_limit = 64;

enum class Expectation { holds, violated, any };

Expectation parse_expectation(const std::string& s, Expectation automatic) {
  if (s == "auto") return automatic;
  if (s == "holds") return Expectation::holds;
  if (s == "violated") return Expectation::violated;
  if (s == "any") return Expectation::any;
  throw Error(ErrorKind::parameter, "--expect must be auto, holds, violated or any");
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::holds: return "holds";
    case Expectation::violated: return "violated";
    case Expectation::any: return "any";
  }
  return "any";
}

json load_document(const RunConfig& config, std::string_view schema) {
  if (config.inputs.empty()) throw Error(ErrorKind::parameter, config.subcommand + " needs an input file");
  json doc = load_json(config.inputs.front());
  expect_schema(doc, schema);
  return doc;
}

std::string presentation_text(const GroupPresentation& p) {
  if (p.generators.size() <= text_presentation_limit) return format_presentation(p);
  return std::to_string(p.generators.size()) + " generators, " + std::to_string(p.relators.size()) +
         " relators";
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

Report run_pushout(const RunConfig& config) {
  PushoutInput in = pushout_input_from_json(load_document(config, "pushout_input"));
  if (!config.basepoint.empty()) in.basepoint = config.basepoint;
  const PushoutResult r = pushout_object_group(in);
  const AbelianInvariants ab = abelianization(r.presentation);

  Report rep;
  json defs = json::object();
  for (const auto& [name, w] : r.f_definition) defs[name] = to_json(w);
  json gluing = json::array();
  for (const RelatorProvenance& g : r.gluing) {
    gluing.push_back(json{{"relator", g.relator_index}, {"object", g.object}, {"loop", g.loop}});
  }
  rep.result = json{{"basepoint", r.basepoint},
                    {"presentation", to_json(r.presentation)},
                    {"presentation_text", format_presentation(r.presentation)},
                    {"a_generators", r.a_generators},
                    {"b_generators", r.b_generators},
                    {"f_generators", r.f_generators},
                    {"f_definitions", std::move(defs)},
                    {"gluing", std::move(gluing)},
                    {"abelianization", to_json(ab)}};
  std::ostringstream text;
  text << "G(" << r.basepoint << ") = " << presentation_text(r.presentation) << '\n';
  if (config.tietze_steps > 0) {
    const GroupPresentation s = tietze_simplify(r.presentation, config.tietze_steps);
    rep.result["simplified"] = to_json(s);
    text << "simplified: " << presentation_text(s) << '\n';
  }
  text << "abelianization: " << format_invariants(ab) << '\n';
  try {
    const Certificate cert = certify(r);
    rep.result["certificate"] = to_json(cert);
    text << "certificate: " << to_string(cert.kind);
    if (cert.kind != CertificateKind::none) text << " (witness " << format_letters(cert.nontrivial_witness) << ")";
    text << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::pipeline) throw;
    rep.status = Status::violation;
    rep.result["certificate"] = json{{"kind", "none"}, {"error", e.detail()}};
    text << "certificate: none (" << e.detail() << ")\n";
  }
  rep.text = text.str();
  return rep;
}

ComplexSource complex_for(const RunConfig& config) {
  if (!config.inputs.empty()) {
    return complex_from_json(load_document(config, "cell_complex"));
  }
  ComplexSource s;
  s.model = parse_model(config.model);
  s.size = config.n;
  s.complex = build_space(*s.model, s.size);
  return s;
}

Report run_pi1(const RunConfig& config) {
  const ComplexSource src = complex_for(config);
  const CellComplex& x = src.complex;
  if (x.vertex_count() == 0) throw Error(ErrorKind::parameter, "complex has no vertices");
  const ObjectId p = config.basepoint.empty() ? x.vertices().front() : config.basepoint;
  const BasedGroupoid bg = fundamental_groupoid_presentation(x, {p});
  const GroupPresentation g = object_group_presentation(bg.groupoid, p);
  const AbelianInvariants ab = abelianization(g);

  Report rep;
  rep.result = json{{"basepoint", p},
                    {"vertices", x.vertex_count()},
                    {"edges", x.edge_count()},
                    {"faces", x.face_count()},
                    {"euler_characteristic", x.euler_characteristic()},
                    {"presentation", to_json(g)},
                    {"presentation_text", format_presentation(g)},
                    {"abelianization", to_json(ab)}};
  std::ostringstream text;
  text << "complex: V=" << x.vertex_count() << " E=" << x.edge_count() << " F=" << x.face_count()
       << " chi=" << x.euler_characteristic() << '\n';
  text << "pi1(X, " << p << ") = " << presentation_text(g) << '\n';
  if (config.tietze_steps > 0) {
    const GroupPresentation s = tietze_simplify(g, config.tietze_steps);
    rep.result["simplified"] = to_json(s);
    text << "simplified: " << presentation_text(s) << '\n';
  }
  text << "abelianization: " << format_invariants(ab) << '\n';
  rep.text = text.str();
  return rep;
}

Report run_abelianize(const RunConfig& config) {
  const GroupPresentation g = group_presentation_from_json(load_document(config, "group_presentation"));
  const AbelianInvariants ab = abelianization(g);
  const ZRetractVerdict z = no_z_retract_sufficient(g);
  Report rep;
  rep.result = json{{"presentation_text", format_presentation(g)},
                    {"abelianization", to_json(ab)},
                    {"z_retract", std::string(to_string(z))}};
  std::ostringstream text;
  text << "group: " << presentation_text(g) << '\n';
  if (config.tietze_steps > 0) {
    const GroupPresentation s = tietze_simplify(g, config.tietze_steps);
    rep.result["simplified"] = to_json(s);
    text << "simplified: " << presentation_text(s) << '\n';
  }
  text << "abelianization: " << format_invariants(ab) << '\n';
  text << "Z retract: " << to_string(z) << '\n';
  rep.text = text.str();
  return rep;
}

Report run_jordan(const RunConfig& config) {
  const Model m = parse_model(config.model);
  if (m != Model::grid_sphere) throw Error(ErrorKind::parameter, "jordan runs on the grid_sphere model");
  const CellComplex x = build_space(m, config.n);
  const CycleBounds bounds{config.min_length, config.max_length == 0 ? 4 * config.n : config.max_length,
                           config.retries};

  Report rep;
  json curves = json::array();
  std::size_t holding = 0;
  std::ostringstream text;
  for (std::size_t k = 0; k < config.count; ++k) {
    const std::uint64_t seed = config.seed + k;
    const CellSet curve = random_simple_cycle(x, seed, bounds);
    const std::size_t length = trace_cycle(x, curve).edge_count();
    JordanReport r = jordan_curve_check(x, curve);
    if (config.pipeline) r.pipeline = run_vankampen_jordan(x, curve);
    if (r.holds()) ++holding;
    curves.push_back(json{{"index", k},
                          {"seed", seed},
                          {"length", length},
                          {"curve", to_json(x, curve)},
                          {"report", to_json(r, x)}});
    text << "curve " << k << " (seed " << seed << ", length " << length << "): " << r.component_count
         << " components, sizes";
    for (std::size_t s : r.component_sizes) text << ' ' << s;
    text << ", boundaries = C:";
    for (bool b : r.boundaries_equal_curve) text << ' ' << yes_no(b);
    if (r.pipeline) {
      if (auto failed = r.pipeline->first_failure()) {
        text << ", pipeline failed at " << *failed;
      } else {
        text << ", pipeline ok (|J| = " << r.pipeline->basepoints.size()
             << ", pi1 ab = " << format_invariants(r.pipeline->pushout_invariants) << ", certificate "
             << to_string(r.pipeline->certificate) << ")";
      }
    }
    text << '\n';
  }
  if (holding != config.count) rep.status = Status::violation;
  rep.result = json{{"model", std::string(to_string(m))},
                    {"n", config.n},
                    {"curves", std::move(curves)},
                    {"count", config.count},
                    {"holding", holding}};
  text << holding << " of " << config.count << " curves satisfy the Jordan checks\n";
  rep.text = text.str();
  return rep;
}

Report run_pbp(const RunConfig& config) {
  std::vector<PbpInstance> instances;
  Expectation automatic = Expectation::any;
  if (!config.inputs.empty()) {
    PbpFile f = pbp_file_from_json(load_document(config, "pbp_instance"));
    if (f.source.model == Model::grid_sphere) automatic = Expectation::holds;
    instances.push_back(PbpInstance{std::move(f.source.complex), std::move(f.d), std::move(f.e), f.a, f.b});
  } else if (config.witness) {
    instances.push_back(cycle_witness(config.n));
    automatic = Expectation::violated;
  } else {
    const Model m = parse_model(config.model);
    if (m == Model::grid_sphere) automatic = Expectation::holds;
    instances = sample_pbp_family(build_space(m, config.n), config.seed, config.count, config.max_arc_edges);
  }
  const Expectation expected = parse_expectation(config.expect, automatic);

  Report rep;
  json items = json::array();
  std::size_t violated = 0;
  std::size_t unexpected = 0;
  std::ostringstream text;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const PbpInstance& inst = instances[k];
    const PbpReport r = pbp_check(inst);
    if (r.verdict == PbpVerdict::violated) ++violated;
    const bool matches = expected == Expectation::any ||
                         (expected == Expectation::holds) == (r.verdict == PbpVerdict::holds);
    if (!matches) ++unexpected;
    items.push_back(json{{"d", to_json(inst.x, inst.d)},
                         {"e", to_json(inst.x, inst.e)},
                         {"a", inst.x.name(inst.a)},
                         {"b", inst.x.name(inst.b)},
                         {"report", to_json(r)}});
    if (instances.size() <= 20 || !matches) {
      text << "instance " << k << ": a=" << inst.x.name(inst.a) << " b=" << inst.x.name(inst.b)
           << " D separates: " << yes_no(r.d_separates) << ", E separates: " << yes_no(r.e_separates)
           << ", D u E separates: " << yes_no(r.union_separates) << " -> " << to_string(r.verdict) << '\n';
    }
  }
  if (unexpected > 0) rep.status = Status::violation;
  rep.result = json{{"instances", std::move(items)},
                    {"count", instances.size()},
                    {"violated", violated},
                    {"expected", std::string(to_string(expected))}};
  text << violated << " of " << instances.size() << " instances violate the property (expected: "
       << to_string(expected) << ")\n";
  rep.text = text.str();
  return rep;
}

Report run_arc(const RunConfig& config) {
  const ArcFile f = arc_file_from_json(load_document(config, "arc_instance"));
  const CellComplex& x = f.source.complex;
  const bool connected = arc_complement_connected(x, f.arc);
  const std::size_t parts = complement_components(x, f.arc).count();
  const Expectation expected =
      parse_expectation(config.expect, f.source.model == Model::grid_sphere ? Expectation::holds : Expectation::any);

  Report rep;
  rep.result = json{{"arc", to_json(x, f.arc)},
                    {"edges", trace_arc(x, f.arc).edge_count()},
                    {"complement_connected", connected},
                    {"complement_components", parts},
                    {"expected", std::string(to_string(expected))}};
  std::ostringstream text;
  text << "complement: " << parts << " component(s), connected: " << yes_no(connected) << '\n';
  bool ok = expected == Expectation::any || (expected == Expectation::holds) == connected;
  if (f.a && f.b) {
    const BisectionResult b = bisection_separating_subarc(x, f.arc, *f.a, *f.b);
    rep.result["bisection"] = to_json(b, x);
    if (b.subarc) {
      bool minimal = separates(x, *b.subarc, *f.a, *f.b);
      if (auto halves = bisect_arc(x, *b.subarc)) {
        minimal = minimal && !separates(x, halves->first, *f.a, *f.b) &&
                  !separates(x, halves->second, *f.a, *f.b);
      }
      rep.result["subarc_minimal"] = minimal;
      ok = ok && minimal;
      text << "separating subarc:";
      for (const auto& name : cell_names(x, *b.subarc)) text << ' ' << name;
      text << " (after " << b.steps.size() << " bisection steps, minimal: " << yes_no(minimal) << ")\n";
    } else {
      text << "the arc does not separate " << x.name(*f.a) << " from " << x.name(*f.b) << '\n';
    }
  }
  if (!ok) rep.status = Status::violation;
  rep.text = text.str();
  return rep;
}

}  // namespace

json to_json(const RunConfig& c) {
  return json{{"subcommand", c.subcommand},   {"inputs", c.inputs},
              {"model", c.model},             {"n", c.n},
              {"seed", c.seed},               {"count", c.count},
              {"basepoint", c.basepoint},     {"format", c.format},
              {"tietze_steps", c.tietze_steps}, {"retries", c.retries},
              {"min_length", c.min_length},   {"max_length", c.max_length},
              {"max_arc_edges", c.max_arc_edges}, {"pipeline", c.pipeline},
              {"witness", c.witness},         {"expect", c.expect}};
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
  }
  return "error";
}

json to_json(const Report& r) {
  return document("report", json{{"subcommand", r.subcommand},
                                 {"config", r.config},
                                 {"status", std::string(to_string(r.status))},
                                 {"result", r.result}});
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::violation: return 2;
    case Status::error: return 1;
  }
  return 1;
}

Report run(const RunConfig& config) {
  Report rep;
  if (config.subcommand == "pushout") {
    rep = run_pushout(config);
  } else if (config.subcommand == "pi1") {
    rep = run_pi1(config);
  } else if (config.subcommand == "abelianize") {
    rep = run_abelianize(config);
  } else if (config.subcommand == "jordan") {
    rep = run_jordan(config);
  } else if (config.subcommand == "pbp") {
    rep = run_pbp(config);
  } else if (config.subcommand == "arc") {
    rep = run_arc(config);
  } else {
    throw Error(ErrorKind::parameter, "unknown subcommand '" + config.subcommand + "'");
  }
  rep.subcommand = config.subcommand;
  rep.config = to_json(config);
  return rep;
}

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Groupoid pushouts, fundamental groups of cell complexes, and discrete Jordan checks"};
  app.name("vkj");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", config.output, "Also write the JSON report to this file");

  auto* pushout = app.add_subcommand("pushout", "Object group of a groupoid pushout, with certificate");
  pushout->add_option("input", config.inputs, "pushout_input JSON file")->required();
  pushout->add_option("--basepoint", config.basepoint, "Basepoint p in J");
  pushout->add_option("--tietze", config.tietze_steps, "Tietze simplification budget");

  auto* pi1 = app.add_subcommand("pi1", "Fundamental group of a cell complex at a vertex");
  pi1->add_option("input", config.inputs, "cell_complex JSON file");
  pi1->add_option("--model", config.model, "Built-in model when no file is given");
  pi1->add_option("--n", config.n, "Model size");
  pi1->add_option("--basepoint", config.basepoint, "Base vertex (default: first vertex)");
  pi1->add_option("--tietze", config.tietze_steps, "Tietze simplification budget");

  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants of a group presentation");
  abelianize->add_option("input", config.inputs, "group_presentation JSON file")->required();
  abelianize->add_option("--tietze", config.tietze_steps, "Tietze simplification budget");

  auto* jordan = app.add_subcommand("jordan", "Jordan curve checks on seeded random simple cycles");
  jordan->add_option("--model", config.model, "Model (grid_sphere)");
  jordan->add_option("--n", config.n, "Grid size");
  jordan->add_option("--seed", config.seed, "Seed of the first curve; curve k uses seed + k");
  jordan->add_option("--count", config.count, "Number of curves");
  jordan->add_option("--min-length", config.min_length, "Minimum cycle length");
  jordan->add_option("--max-length", config.max_length, "Maximum cycle length (default 4n)");
  jordan->add_option("--retries", config.retries, "Generation retry budget");
  jordan->add_flag("!--no-pipeline", config.pipeline, "Skip the van Kampen pipeline");

  auto* pbp = app.add_subcommand("pbp", "Phragmen-Brouwer property checks");
  pbp->add_option("input", config.inputs, "pbp_instance JSON file");
  pbp->add_option("--model", config.model, "Model for sampled instances");
  pbp->add_option("--n", config.n, "Model size");
  pbp->add_option("--seed", config.seed, "Sampling seed");
  pbp->add_option("--count", config.count, "Number of sampled instances");
  pbp->add_option("--max-arc", config.max_arc_edges, "Longest sampled arc, in edges");
  pbp->add_flag("--witness", config.witness, "The circle witness on cycle(n)");
  pbp->add_option("--expect", config.expect, "auto, holds, violated or any");

  auto* arc = app.add_subcommand("arc", "Arc complement connectivity and bisection");
  arc->add_option("input", config.inputs, "arc_instance JSON file")->required();
  arc->add_option("--expect", config.expect, "auto, holds, violated or any");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  try {
    const Report rep = run(config);
    const json doc = to_json(rep);
    if (!config.output.empty()) store_json(config.output, doc);
    if (config.format == "json") {
      out << doc.dump(2) << '\n';
    } else {
      out << rep.text;
      out << "status: " << to_string(rep.status) << '\n';
    }
    return exit_code(rep.status);
  } catch (const Error& e) {
    err << "vkj: " << e.what() << '\n';
    if (config.format == "json") {
      Report rep;
      rep.subcommand = config.subcommand;
      rep.config = to_json(config);
      rep.status = Status::error;
      rep.result = json{{"error", json{{"kind", std::string(to_string(e.kind()))}, {"message", e.detail()}}}};
      out << to_json(rep).dump(2) << '\n';
    }
    return exit_code(Status::error);
  }
}

}  // namespace vk::cli
