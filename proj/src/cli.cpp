#include "qcm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcm/degeneration.hpp"
#include "qcm/homogeneity.hpp"
#include "qcm/verify.hpp"

namespace qcm {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuiverPtr load_quiver(const std::string& path) {
  return std::make_shared<Quiver>(Quiver::parse(read_file(path)));
}

// A representation file may carry a `quiver <path>` hint (relative to its
// own directory) so commands can take the representation alone.
std::optional<std::string> embedded_quiver_path(const std::string& rep_path,
                                                const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw, path;
    if (ls >> kw && kw == "quiver" && ls >> path) {
      std::filesystem::path p(path);
      if (p.is_relative()) p = std::filesystem::path(rep_path).parent_path() / p;
      return p.string();
    }
  }
  return std::nullopt;
}

Representation change_field(const Representation& m, const Field& f) {
  if (m.field() == f) return m;
  if (m.field().kind != FieldKind::Rationals)
    throw Error("--field: cannot convert entries out of " + m.field().name());
  std::vector<Mat> mats;
  for (const auto& mat : m.matrices()) {
    Mat c(mat.rows(), mat.cols(), FieldElement(f));
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j) {
        const mpq_class& v = mat.at(i, j).rational();
        if (v.get_den() != 1)
          throw Error("--field: entry " + v.get_str() + " is not an integer; cannot move to " +
                      f.name());
        c.at(i, j) = FieldElement::from_rational(f, v);
      }
    mats.push_back(std::move(c));
  }
  return Representation(m.quiver_ptr(), f, m.dims(), std::move(mats));
}

struct RepArgs {
  std::vector<std::string> files;  // [quiver] rep...
  std::string field;
};

// Resolves quiver + representation files: either an explicit quiver file
// followed by rep files, or rep files with embedded `quiver` hints.
std::vector<Representation> load_reps(const RepArgs& a, std::size_t nreps) {
  std::vector<Representation> reps;
  QuiverPtr q;
  std::size_t first_rep = 0;
  if (a.files.size() == nreps + 1) {
    q = load_quiver(a.files[0]);
    first_rep = 1;
  } else if (a.files.size() != nreps) {
    throw Error("expected [quiver] plus " + std::to_string(nreps) + " representation file(s)");
  }
  for (std::size_t i = first_rep; i < a.files.size(); ++i) {
    const std::string text = read_file(a.files[i]);
    QuiverPtr use = q;
    if (!use) {
      auto hint = embedded_quiver_path(a.files[i], text);
      if (!hint)
        throw Error("no quiver file given and " + a.files[i] + " has no 'quiver <path>' line");
      use = load_quiver(*hint);
    }
    Representation rep = Representation::parse(text, use);
    if (!a.field.empty()) rep = change_field(rep, parse_field(a.field));
    reps.push_back(std::move(rep));
  }
  return reps;
}

DimVector parse_dim_list(const std::string& s, const Quiver& q) {
  DimVector d;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      d.push_back(std::stoi(tok));
    } catch (...) {
      throw Error("bad dimension entry '" + tok + "' (expected comma-separated integers)");
    }
  }
  check_dim_vector(q, d);
  return d;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw Error("cannot write file: " + output);
    f << text;
  }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

Json label_json(const OrbitLabel& label) {
  Json parts = Json::array();
  for (const auto& [r, mult] : label.parts) parts.push_back(Json::array({Json(r), Json(mult)}));
  return parts;
}

Json betti_json(const BettiTable& b) {
  Json rows = Json::array();
  for (const auto& [key, v] : b.b) rows.push_back(Json::array({key.first, key.second, v}));
  return rows;
}

std::string invariant_text(const InvariantReport& r) {
  std::ostringstream s;
  s << "l: " << r.l << "\n";
  s << "sum_d_sq: " << r.sum_d_sq << "\n";
  s << "end_dim: " << r.end << "\n";
  s << "pd_formula: " << r.pd << "\n";
  if (r.ext1) s << "ext1_dim: " << *r.ext1 << "\n";
  if (r.orbit) s << "orbit_dim: " << *r.orbit << "\n";
  if (r.open) s << "orbit_open: " << yesno(*r.open) << "\n";
  if (r.closed) s << "orbit_closed: " << yesno(*r.closed) << "\n";
  if (!r.acyclic)
    s << "note: quiver has oriented cycles; ext/orbit invariants are undefined here\n";
  else if (!r.tree)
    s << "note: quiver is not a tree; the pd formula is not certified to match the "
         "resolution for this input\n";
  return s.str();
}

Json invariant_json(const InvariantReport& r) {
  Json j;
  j["l"] = r.l;
  j["sum_d_sq"] = r.sum_d_sq;
  j["end_dim"] = r.end;
  j["pd_formula"] = r.pd;
  if (r.ext1) j["ext1_dim"] = *r.ext1;
  if (r.orbit) j["orbit_dim"] = *r.orbit;
  if (r.open) j["orbit_open"] = *r.open;
  if (r.closed) j["orbit_closed"] = *r.closed;
  j["tree"] = r.tree;
  j["acyclic"] = r.acyclic;
  if (!r.acyclic)
    j["note"] = "quiver has oriented cycles; ext/orbit invariants are undefined here";
  else if (!r.tree)
    j["note"] =
        "quiver is not a tree; the pd formula is not certified to match the resolution for "
        "this input";
  return j;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"homological invariants of quiver orbit closures"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--output may follow the subcommand
  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "output format: text, json or dot")->capture_default_str();
  app.add_option("--output", output, "write the report to a file instead of stdout");

  RepArgs ra;
  std::string dim_list;
  std::string lambda_str;
  std::string order_name = "degrevlex";

  auto* c_classify = app.add_subcommand("classify", "structural flags of a quiver");
  c_classify->add_option("files", ra.files, "quiver file")->expected(1);

  auto* c_roots = app.add_subcommand("roots", "positive roots of a Dynkin quiver");
  c_roots->add_option("files", ra.files, "quiver file")->expected(1);

  auto* c_enum = app.add_subcommand("enumerate", "orbit labels of (Q, d)");
  c_enum->add_option("files", ra.files, "quiver file")->expected(1);
  c_enum->add_option("--dim", dim_list, "dimension vector, comma-separated")->required();

  auto* c_degen = app.add_subcommand("degen-poset", "degeneration order of (Q, d)");
  c_degen->add_option("files", ra.files, "quiver file")->expected(1);
  c_degen->add_option("--dim", dim_list, "dimension vector, comma-separated")->required();

  auto* c_survey = app.add_subcommand("survey", "pd-formula table over all orbits of (Q, d)");
  c_survey->add_option("files", ra.files, "quiver file")->expected(1);
  c_survey->add_option("--dim", dim_list, "dimension vector, comma-separated")->required();

  auto add_rep_cmd = [&](const char* name, const char* desc, int nfiles_min, int nfiles_max) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("files", ra.files, "[quiver] representation file(s)")
        ->expected(nfiles_min, nfiles_max);
    c->add_option("--field", ra.field, "override the coefficient field (q or f<p>)");
    return c;
  };

  auto* c_hom = add_rep_cmd("hom", "dimension and basis size of Hom(M, N)", 2, 3);
  auto* c_end = add_rep_cmd("end", "dimension of End(M)", 1, 2);
  auto* c_ext = add_rep_cmd("ext", "dimension of Ext^1(M, M)", 1, 2);
  auto* c_orbit = add_rep_cmd("orbit-dim", "dimension of the orbit of M", 1, 2);
  auto* c_pd = add_rep_cmd("pd-formula", "formula-side invariants of M", 1, 2);
  auto* c_dec = add_rep_cmd("decompose", "indecomposable summands of M", 1, 2);
  auto* c_homog = add_rep_cmd("homogeneous", "is the orbit closure of M a cone", 1, 2);
  c_homog->add_option("--lambda", lambda_str, "also test m against lambda*m for this scalar");
  auto* c_ideal = add_rep_cmd("ideal", "rank-condition ideal of the orbit closure", 1, 2);
  c_ideal->add_option("--order", order_name, "monomial order: degrevlex, deglex or lex");
  auto* c_resolve = add_rep_cmd("resolve", "minimal free resolution of the orbit closure", 1, 2);
  c_resolve->add_option("--order", order_name, "monomial order: degrevlex, deglex or lex");
  auto* c_verify = add_rep_cmd("verify-cm", "end-to-end Cohen-Macaulay verification", 1, 2);
  c_verify->add_option("--order", order_name, "monomial order: degrevlex, deglex or lex");

  std::vector<const char*> argv;
  argv.push_back("quivercm");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const bool json = format == "json";

  if (*c_classify) {
    auto q = load_quiver(ra.files[0]);
    const auto cls = classify(*q);
    if (json) {
      Json j;
      j["connected"] = cls.connected;
      j["acyclic"] = cls.acyclic;
      j["tree"] = cls.tree;
      j["dynkin"] = cls.dynkin_name();
      j["equioriented_a"] = cls.equioriented_a;
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      s << "connected: " << yesno(cls.connected) << "\n";
      s << "acyclic: " << yesno(cls.acyclic) << "\n";
      s << "tree: " << yesno(cls.tree) << "\n";
      s << "dynkin: " << cls.dynkin_name() << "\n";
      s << "equioriented_a: " << yesno(cls.equioriented_a) << "\n";
      emit(s.str(), output, out);
    }
    return 0;
  }

  if (*c_roots) {
    auto q = load_quiver(ra.files[0]);
    const auto roots = positive_roots(*q);
    if (json) {
      Json j;
      j["count"] = roots.size();
      j["roots"] = Json::array();
      for (const auto& r : roots) j["roots"].push_back(r);
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      for (const auto& r : roots) {
        s << "(";
        for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << r[i];
        s << ")\n";
      }
      s << roots.size() << " roots\n";
      emit(s.str(), output, out);
    }
    return 0;
  }

  if (*c_enum) {
    auto q = load_quiver(ra.files[0]);
    const auto d = parse_dim_list(dim_list, *q);
    const auto labels = enumerate_orbits(*q, d);
    if (json) {
      Json j;
      j["count"] = labels.size();
      j["orbits"] = Json::array();
      for (const auto& label : labels) j["orbits"].push_back(label_json(label));
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      for (const auto& label : labels) s << label.str() << "\n";
      s << labels.size() << " orbits\n";
      emit(s.str(), output, out);
    }
    return 0;
  }

  if (*c_degen) {
    auto q = load_quiver(ra.files[0]);
    const auto d = parse_dim_list(dim_list, *q);
    const auto p = degeneration_poset(q, d, Field::rationals());
    const auto check = check_degeneration_pd(p);
    if (format == "dot") {
      emit(export_dot(p), output, out);
    } else if (json) {
      Json j;
      j["dim"] = d;
      j["nodes"] = Json::array();
      for (const auto& n : p.nodes) {
        Json nj;
        nj["label"] = label_json(n.label);
        nj["orbit_dim"] = n.orbit_dim;
        nj["ext1"] = n.ext1;
        nj["pd"] = n.pd;
        nj["open"] = n.open;
        nj["closed"] = n.closed;
        j["nodes"].push_back(nj);
      }
      j["covers"] = Json::array();
      for (const auto& [a, b] : p.covers) j["covers"].push_back(Json::array({a, b}));
      j["dense"] = p.dense_index();
      j["semisimple"] = p.semisimple_index();
      j["pd_check"] = Json();
      j["pd_check"]["passed"] = check.passed();
      j["pd_check"]["closed_nodes"] = check.closed_nodes;
      Json viols = Json::array();
      for (const auto& v : check.violations)
        viols.push_back(Json::array({v.node, v.what}));
      j["pd_check"]["violations"] = viols;
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const auto& n = p.nodes[i];
        s << i << ": " << n.label.str() << "  orbit_dim=" << n.orbit_dim << " pd=" << n.pd
          << (n.open ? " open" : "") << (n.closed ? " closed" : "") << "\n";
      }
      for (const auto& [a, b] : p.covers) s << a << " -> " << b << "\n";
      s << "pd_check: " << (check.passed() ? "passed" : "FAILED") << "\n";
      for (const auto& v : check.violations) s << "violation at node " << v.node << ": " << v.what << "\n";
      emit(s.str(), output, out);
    }
    return check.passed() ? 0 : 3;
  }

  if (*c_survey) {
    auto q = load_quiver(ra.files[0]);
    const auto d = parse_dim_list(dim_list, *q);
    const auto rows = pd_formula_survey(q, d, Field::rationals());
    if (json) {
      Json j = Json::array();
      for (const auto& r : rows) {
        Json rj;
        rj["label"] = label_json(r.label);
        rj["orbit_dim"] = r.orbit_dim;
        rj["pd"] = r.pd;
        rj["open"] = r.open;
        rj["closed"] = r.closed;
        j.push_back(rj);
      }
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      for (const auto& r : rows)
        s << r.label.str() << "  orbit_dim=" << r.orbit_dim << " pd=" << r.pd
          << (r.open ? " open" : "") << (r.closed ? " closed" : "") << "\n";
      s << rows.size() << " orbits\n";
      emit(s.str(), output, out);
    }
    return 0;
  }

  if (*c_hom) {
    auto reps = load_reps(ra, 2);
    const auto hs = hom_space(reps[0], reps[1]);
    if (json) {
      Json j;
      j["hom_dim"] = hs.dimension;
      emit(j.dump(2) + "\n", output, out);
    } else {
      emit("hom_dim: " + std::to_string(hs.dimension) + "\n", output, out);
    }
    return 0;
  }

  if (*c_end || *c_ext || *c_orbit || *c_pd) {
    auto reps = load_reps(ra, 1);
    const auto& m = reps[0];
    if (*c_end) {
      const long e = end_dim(m);
      emit(json ? Json{{"end_dim", e}}.dump(2) + "\n" : "end_dim: " + std::to_string(e) + "\n",
           output, out);
      return 0;
    }
    if (*c_ext) {
      const long e = ext1_dim(m);
      emit(json ? Json{{"ext1_dim", e}}.dump(2) + "\n" : "ext1_dim: " + std::to_string(e) + "\n",
           output, out);
      return 0;
    }
    if (*c_orbit) {
      const long o = orbit_dim(m);
      emit(json ? Json{{"orbit_dim", o}}.dump(2) + "\n" : "orbit_dim: " + std::to_string(o) + "\n",
           output, out);
      return 0;
    }
    const auto rep = invariant_report(m);
    emit(json ? invariant_json(rep).dump(2) + "\n" : invariant_text(rep), output, out);
    return 0;
  }

  if (*c_dec) {
    auto reps = load_reps(ra, 1);
    const auto label = decompose(reps[0]);
    if (json) {
      Json j;
      j["parts"] = label_json(label);
      emit(j.dump(2) + "\n", output, out);
    } else {
      emit(label.str() + "\n", output, out);
    }
    return 0;
  }

  if (*c_homog) {
    auto reps = load_reps(ra, 1);
    const auto& m = reps[0];
    const auto v = is_homogeneous(m);
    std::optional<bool> lambda_iso;
    if (!lambda_str.empty()) {
      const FieldElement lam = FieldElement::parse(m.field(), lambda_str);
      if (lam.is_zero()) throw Error("--lambda must be nonzero");
      lambda_iso = is_isomorphic_generic(m, m.scale(lam));
    }
    std::string kind;
    switch (v.kind) {
      case HomogeneityKind::TreeCone: kind = "tree-scaling"; break;
      case HomogeneityKind::GenericScaling: kind = "generic-scaling"; break;
      case HomogeneityKind::NotHomogeneous: kind = "not-homogeneous"; break;
      case HomogeneityKind::InconclusiveGenericFalse: kind = "inconclusive-generic-false"; break;
    }
    if (json) {
      Json j;
      j["homogeneous"] = v.homogeneous;
      j["kind"] = kind;
      if (v.witness_lambda) j["witness_lambda"] = *v.witness_lambda;
      j["detail"] = v.detail;
      if (lambda_iso) {
        j["lambda_test"] = Json();
        j["lambda_test"]["lambda"] = lambda_str;
        j["lambda_test"]["isomorphic"] = *lambda_iso;
      }
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      if (v.homogeneous) {
        s << "homogeneous (" << kind << ")\n";
      } else if (v.witness_lambda) {
        s << "not homogeneous; witness lambda=" << *v.witness_lambda << "\n";
      } else {
        s << kind << ": " << v.detail << "\n";
      }
      if (lambda_iso)
        s << "isomorphic to " << lambda_str << "*m: " << yesno(*lambda_iso) << "\n";
      emit(s.str(), output, out);
    }
    return 0;
  }

  if (*c_ideal || *c_resolve) {
    auto reps = load_reps(ra, 1);
    const auto& m = reps[0];
    const long l = rep_space_dim(m.quiver(), m.dims());
    if (l > kMaxRepSpaceVars)
      throw ScaleLimit("rep space has " + std::to_string(l) + " variables (limit " +
                       std::to_string(kMaxRepSpaceVars) + ")");
    auto ring = rep_space_ring(m.quiver(), m.dims(), m.field(), parse_mono_order(order_name));
    const auto ideal = rank_condition_ideal(m, ring);
    if (*c_ideal) {
      if (json) {
        Json j;
        j["field"] = ring->field.name();
        j["variables"] = ring->vars;
        j["generators"] = Json::array();
        for (const auto& g : ideal.gens) j["generators"].push_back(g.str());
        j["homogeneous"] = ideal.homogeneous;
        emit(j.dump(2) + "\n", output, out);
      } else {
        std::ostringstream s;
        for (const auto& g : ideal.gens) s << g.str() << "\n";
        s << ideal.gens.size() << " generators in " << ring->nvars() << " variables\n";
        emit(s.str(), output, out);
      }
      return 0;
    }
    const auto betti = minimal_free_resolution(ideal, ring);
    if (json) {
      Json j;
      j["pd"] = betti.pd;
      j["betti"] = betti_json(betti);
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      s << "pd: " << betti.pd << "\n";
      for (const auto& [key, v] : betti.b)
        s << "betti " << key.first << " " << key.second << ": " << v << "\n";
      emit(s.str(), output, out);
    }
    return 0;
  }

  if (*c_verify) {
    auto reps = load_reps(ra, 1);
    const auto& m = reps[0];
    const auto rep = verify_cm(m, m.field(), parse_mono_order(order_name));
    if (json) {
      Json j;
      j["l"] = rep.l;
      j["field"] = rep.field_name;
      j["pd"] = rep.pd_resolution;
      j["pd_formula"] = rep.pd_predicted;
      j["dim"] = rep.dim;
      j["depth"] = rep.depth;
      j["height"] = rep.height;
      j["grade"] = rep.grade;
      j["orbit_dim"] = rep.orbit_dim;
      j["cm"] = rep.cm;
      j["perfect"] = rep.perfect;
      j["cm_iff_pd_formula"] = rep.cm_iff_formula;
      j["auslander_buchsbaum"] = rep.auslander_buchsbaum;
      j["betti"] = betti_json(rep.betti);
      j["assumption"] = rep.assumption;
      emit(j.dump(2) + "\n", output, out);
    } else {
      std::ostringstream s;
      s << "l: " << rep.l << "\n";
      s << "field: " << rep.field_name << "\n";
      s << "pd_resolution: " << rep.pd_resolution << "\n";
      s << "pd_formula: " << rep.pd_predicted << "\n";
      s << "dim: " << rep.dim << "\n";
      s << "depth: " << rep.depth << "\n";
      s << "height: " << rep.height << "\n";
      s << "grade: " << rep.grade << "\n";
      s << "orbit_dim: " << rep.orbit_dim << "\n";
      s << "cm: " << yesno(rep.cm) << "\n";
      s << "perfect: " << yesno(rep.perfect) << "\n";
      s << "cm_iff_pd_formula: " << yesno(rep.cm_iff_formula) << "\n";
      s << "auslander_buchsbaum: " << yesno(rep.auslander_buchsbaum) << "\n";
      for (const auto& [key, v] : rep.betti.b)
        s << "betti " << key.first << " " << key.second << ": " << v << "\n";
      s << "note: " << rep.assumption << "\n";
      emit(s.str(), output, out);
    }
    return rep.cm_iff_formula ? 0 : 3;
  }

  err << "error: no subcommand\n";
  return 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const ScaleLimit& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qcm
