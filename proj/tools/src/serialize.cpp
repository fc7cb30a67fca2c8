#include "vk/cli/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "vk/error.hpp"

namespace vk::cli {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::schema, path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string at_key(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string string_of(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

const json& array_of(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::vector<std::string> strings_of(const json& j, const std::string& path) {
  std::vector<std::string> out;
  const json& arr = array_of(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string_of(arr[i], at_index(path, i)));
  return out;
}

Arrow arrow_from_json(const json& j, const std::string& path) {
  return Arrow{string_of(field(j, "id", path), at_key(path, "id")),
               string_of(field(j, "src", path), at_key(path, "src")),
               string_of(field(j, "tgt", path), at_key(path, "tgt"))};
}

json arrow_json(const Arrow& a) { return json{{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}}; }

json integer_json(const Integer& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json cell_json(const CellComplex& x, CellId c) { return x.name(c); }

}  // namespace

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (auto colon = detail.rfind(": "); colon != std::string::npos) detail = detail.substr(colon + 2);
    throw Error(ErrorKind::parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail);
  }
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_text(buffer.str());
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, path.string() + ": " + e.detail());
  }
}

void store_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path.string() + "'");
}

json document(std::string_view schema, json body) {
  body["schema"] = std::string(schema);
  body["version"] = schema_version;
  return body;
}

void expect_schema(const json& doc, std::string_view schema) {
  const std::string found = string_of(field(doc, "schema", "$"), "$.schema");
  if (found != schema) schema_error("$.schema", "expected '" + std::string(schema) + "', found '" + found + "'");
  const json& v = field(doc, "version", "$");
  if (!v.is_number_integer() || v.get<int>() != schema_version) {
    schema_error("$.version", "unsupported version, expected " + std::to_string(schema_version));
  }
}

json to_json(const Letters& w) {
  json out = json::array();
  for (const Letter& l : w) out.push_back(json::array({l.symbol, l.sign}));
  return out;
}

json to_json(const Word& w) { return json{{"start", w.start}, {"letters", to_json(w.letters)}}; }

json to_json(const GroupPresentation& p) {
  json relators = json::array();
  for (const Letters& r : p.relators) relators.push_back(to_json(r));
  return json{{"generators", p.generators}, {"relators", std::move(relators)}};
}

json to_json(const GroupoidPresentation& g) {
  json arrows = json::array();
  for (const Arrow& a : g.arrows()) arrows.push_back(arrow_json(a));
  json relations = json::array();
  for (const Word& w : g.relations()) relations.push_back(to_json(w));
  return json{{"objects", g.objects()}, {"arrows", std::move(arrows)}, {"relations", std::move(relations)}};
}

json to_json(const GroupoidMorphismData& m) {
  json arrows = json::object();
  for (const auto& [id, w] : m.arrow_map) arrows[id] = to_json(w);
  json out{{"arrow_map", std::move(arrows)}};
  if (!m.object_map.empty()) out["object_map"] = m.object_map;
  return out;
}

json to_json(const PushoutInput& in) {
  return json{{"objects", in.objects}, {"basepoint", in.basepoint}, {"c", to_json(in.c)},
              {"a", to_json(in.a)},    {"b", to_json(in.b)},       {"i", to_json(in.i)},
              {"j", to_json(in.j)}};
}

json to_json(const CellComplex& x) {
  json edges = json::array();
  for (const Arrow& a : x.edges()) edges.push_back(arrow_json(a));
  json faces = json::array();
  for (const Face& f : x.faces()) faces.push_back(json{{"id", f.id}, {"boundary", to_json(f.boundary)}});
  return json{{"vertices", x.vertices()}, {"edges", std::move(edges)}, {"faces", std::move(faces)}};
}

json to_json(const AbelianInvariants& a) {
  json torsion = json::array();
  for (const Integer& t : a.torsion) torsion.push_back(integer_json(t));
  return json{{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}, {"text", format_invariants(a)}};
}

Letters letters_from_json(const json& j, const std::string& path) {
  Letters out;
  const json& arr = array_of(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at_index(path, i);
    const json& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2) schema_error(p, "expected [generator, sign]");
    if (!pair[1].is_number_integer()) schema_error(p + "[1]", "sign must be 1 or -1");
    const auto sign = pair[1].get<std::int64_t>();
    if (sign != 1 && sign != -1) schema_error(p + "[1]", "sign must be 1 or -1");
    out.push_back(Letter{string_of(pair[0], p + "[0]"), static_cast<int>(sign)});
  }
  return out;
}

Word word_from_json(const json& j, const std::string& path) {
  return Word{string_of(field(j, "start", path), at_key(path, "start")),
              letters_from_json(field(j, "letters", path), at_key(path, "letters"))};
}

GroupPresentation group_presentation_from_json(const json& j, const std::string& path) {
  GroupPresentation p;
  p.generators = strings_of(field(j, "generators", path), at_key(path, "generators"));
  const std::string rpath = at_key(path, "relators");
  const json& rel = array_of(field(j, "relators", path), rpath);
  for (std::size_t i = 0; i < rel.size(); ++i) p.relators.push_back(letters_from_json(rel[i], at_index(rpath, i)));
  try {
    validate(p);
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
  return p;
}

GroupoidPresentation groupoid_from_json(const json& j, const std::string& path) {
  std::vector<ObjectId> objects = strings_of(field(j, "objects", path), at_key(path, "objects"));
  std::vector<Arrow> arrows;
  const std::string apath = at_key(path, "arrows");
  const json& arr = array_of(field(j, "arrows", path), apath);
  for (std::size_t i = 0; i < arr.size(); ++i) arrows.push_back(arrow_from_json(arr[i], at_index(apath, i)));

  GroupoidPresentation skeleton;
  try {
    skeleton = GroupoidPresentation(objects, arrows);
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
  std::vector<Word> relations;
  const std::string rpath = at_key(path, "relations");
  const json& rel = j.contains("relations") ? array_of(j.at("relations"), rpath) : json::array();
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string p = at_index(rpath, i);
    Word w = word_from_json(rel[i], p);
    ObjectId end;
    try {
      end = skeleton.end_of(w);
    } catch (const Error& e) {
      schema_error(p, e.what());
    }
    if (end != w.start) schema_error(p, "relation " + std::to_string(i) + " is not a loop");
    relations.push_back(std::move(w));
  }
  return GroupoidPresentation(std::move(objects), std::move(arrows), std::move(relations));
}

GroupoidMorphismData morphism_from_json(const json& j, const std::string& path) {
  GroupoidMorphismData m;
  const std::string apath = at_key(path, "arrow_map");
  const json& arrows = field(j, "arrow_map", path);
  if (!arrows.is_object()) schema_error(apath, "expected an object");
  for (const auto& [id, w] : arrows.items()) m.arrow_map.emplace(id, word_from_json(w, at_key(apath, id)));
  if (j.contains("object_map")) {
    const std::string opath = at_key(path, "object_map");
    const json& objects = j.at("object_map");
    if (!objects.is_object()) schema_error(opath, "expected an object");
    for (const auto& [from, to] : objects.items()) m.object_map.emplace(from, string_of(to, at_key(opath, from)));
  }
  return m;
}

PushoutInput pushout_input_from_json(const json& j, const std::string& path) {
  PushoutInput in;
  in.objects = strings_of(field(j, "objects", path), at_key(path, "objects"));
  in.basepoint = string_of(field(j, "basepoint", path), at_key(path, "basepoint"));
  in.c = groupoid_from_json(field(j, "c", path), at_key(path, "c"));
  in.a = groupoid_from_json(field(j, "a", path), at_key(path, "a"));
  in.b = groupoid_from_json(field(j, "b", path), at_key(path, "b"));
  in.i = morphism_from_json(field(j, "i", path), at_key(path, "i"));
  in.j = morphism_from_json(field(j, "j", path), at_key(path, "j"));
  validate_pushout_input(in);
  return in;
}

json to_json(const ComplexSource& s) {
  if (s.model) return json{{"model", std::string(to_string(*s.model))}, {"n", s.size}};
  return to_json(s.complex);
}

ComplexSource complex_from_json(const json& j, const std::string& path) {
  ComplexSource out;
  if (j.is_object() && j.contains("model")) {
    const std::string name = string_of(j.at("model"), at_key(path, "model"));
    const json& n = field(j, "n", path);
    if (!n.is_number_integer() || n.get<std::int64_t>() < 0) {
      schema_error(at_key(path, "n"), "expected a non-negative integer");
    }
    try {
      out.model = parse_model(name);
    } catch (const Error& e) {
      schema_error(at_key(path, "model"), e.what());
    }
    out.size = n.get<std::size_t>();
    out.complex = build_space(*out.model, out.size);
    return out;
  }
  std::vector<ObjectId> vertices = strings_of(field(j, "vertices", path), at_key(path, "vertices"));
  std::vector<Arrow> edges;
  const std::string epath = at_key(path, "edges");
  const json& earr = array_of(field(j, "edges", path), epath);
  for (std::size_t i = 0; i < earr.size(); ++i) edges.push_back(arrow_from_json(earr[i], at_index(epath, i)));
  std::vector<Face> faces;
  const std::string fpath = at_key(path, "faces");
  const json& farr = j.contains("faces") ? array_of(j.at("faces"), fpath) : json::array();
  for (std::size_t i = 0; i < farr.size(); ++i) {
    const std::string p = at_index(fpath, i);
    faces.push_back(Face{string_of(field(farr[i], "id", p), at_key(p, "id")),
                         word_from_json(field(farr[i], "boundary", p), at_key(p, "boundary"))});
  }
  try {
    out.complex = CellComplex(std::move(vertices), std::move(edges), std::move(faces));
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
  return out;
}

CellSet cell_set_from_json(const CellComplex& x, const json& j, const std::string& path) {
  CellSet out(x.cell_count());
  const json& arr = array_of(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.insert(cell_from_json(x, arr[i], at_index(path, i)));
  return out;
}

CellId cell_from_json(const CellComplex& x, const json& j, const std::string& path) {
  const std::string name = string_of(j, path);
  auto c = x.find(name);
  if (!c) schema_error(path, "no cell named '" + name + "'");
  return *c;
}

json to_json(const CellComplex& x, const CellSet& s) { return cell_names(x, s); }

json to_json(const PbpFile& f) {
  const CellComplex& x = f.source.complex;
  return json{{"complex", to_json(f.source)}, {"d", to_json(x, f.d)}, {"e", to_json(x, f.e)},
              {"a", cell_json(x, f.a)},       {"b", cell_json(x, f.b)}};
}

PbpFile pbp_file_from_json(const json& j, const std::string& path) {
  PbpFile f;
  f.source = complex_from_json(field(j, "complex", path), at_key(path, "complex"));
  const CellComplex& x = f.source.complex;
  f.d = cell_set_from_json(x, field(j, "d", path), at_key(path, "d"));
  f.e = cell_set_from_json(x, field(j, "e", path), at_key(path, "e"));
  f.a = cell_from_json(x, field(j, "a", path), at_key(path, "a"));
  f.b = cell_from_json(x, field(j, "b", path), at_key(path, "b"));
  return f;
}

json to_json(const ArcFile& f) {
  const CellComplex& x = f.source.complex;
  json out{{"complex", to_json(f.source)}, {"arc", to_json(x, f.arc)}};
  if (f.a) out["a"] = cell_json(x, *f.a);
  if (f.b) out["b"] = cell_json(x, *f.b);
  return out;
}

ArcFile arc_file_from_json(const json& j, const std::string& path) {
  ArcFile f;
  f.source = complex_from_json(field(j, "complex", path), at_key(path, "complex"));
  const CellComplex& x = f.source.complex;
  f.arc = cell_set_from_json(x, field(j, "arc", path), at_key(path, "arc"));
  if (j.contains("a") != j.contains("b")) schema_error(path, "give both 'a' and 'b' or neither");
  if (j.contains("a")) {
    f.a = cell_from_json(x, j.at("a"), at_key(path, "a"));
    f.b = cell_from_json(x, j.at("b"), at_key(path, "b"));
  }
  return f;
}

json to_json(const Certificate& c) {
  json out{{"kind", std::string(to_string(c.kind))}};
  if (c.kind != CertificateKind::none) {
    out["witness"] = to_json(c.nontrivial_witness);
    out["witness_text"] = format_letters(c.nontrivial_witness);
  }
  if (!c.commutator_witness.empty()) {
    out["commutator"] = to_json(c.commutator_witness);
    out["commutator_text"] = format_letters(c.commutator_witness);
  }
  return out;
}

json to_json(const PbpReport& r) {
  return json{{"d_separates", r.d_separates},
              {"e_separates", r.e_separates},
              {"union_separates", r.union_separates},
              {"verdict", std::string(to_string(r.verdict))}};
}

json to_json(const PipelineSummary& s, const CellComplex& x) {
  json stages = json::array();
  for (const StageCheck& st : s.stages) {
    stages.push_back(json{{"stage", st.stage}, {"passed", st.passed}, {"detail", st.detail}});
  }
  json out{{"a", cell_json(x, s.a)},
           {"b", cell_json(x, s.b)},
           {"arc_a_edges", s.arc_a_edges},
           {"arc_b_edges", s.arc_b_edges},
           {"basepoints", s.basepoints},
           {"j_count", s.basepoints.size()},
           {"u_invariants", to_json(s.u_invariants)},
           {"v_invariants", to_json(s.v_invariants)},
           {"pushout_invariants", to_json(s.pushout_invariants)},
           {"groupoid_invariants", to_json(s.groupoid_invariants)},
           {"direct_invariants", to_json(s.direct_invariants)},
           {"f_generators", s.f_generators},
           {"certificate", std::string(to_string(s.certificate))},
           {"stages", std::move(stages)},
           {"passed", s.passed()}};
  return out;
}

json to_json(const JordanReport& r, const CellComplex& x) {
  json out{{"component_count", r.component_count},
           {"component_sizes", r.component_sizes},
           {"boundaries_equal_curve", r.boundaries_equal_curve},
           {"holds", r.holds()}};
  if (r.pipeline) out["pipeline"] = to_json(*r.pipeline, x);
  return out;
}

json to_json(const BisectionResult& r, const CellComplex& x) {
  json steps = json::array();
  for (const BisectionStep& s : r.steps) {
    steps.push_back(json{{"arc", to_json(x, s.arc)},
                         {"first_half", to_json(x, s.first_half)},
                         {"second_half", to_json(x, s.second_half)},
                         {"first_separates", s.first_separates},
                         {"second_separates", s.second_separates}});
  }
  json out{{"steps", std::move(steps)}};
  out["subarc"] = r.subarc ? to_json(x, *r.subarc) : json(nullptr);
  return out;
}

}  // namespace vk::cli
