#include "imm5_cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "imm5/errors.hpp"
#include "imm5/spin.hpp"

namespace imm5::cli {

namespace fs = std::filesystem;

// ------------------------------------------------------------------ integers

json integer_to_json(const Integer& x) {
  static const Integer limit = Integer(1) << 53;
  if (abs(x) <= limit) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError(where + ": '" + s + "' is not a decimal integer");
    return x;
  }
  throw ParseError(where + ": expected an integer, got " + std::string(j.type_name()));
}

namespace {

std::string display(const Integer& x) { return x.get_str(); }

/// Parenthesised when negative, for use inside a formula.
std::string term(const Integer& x) { return sgn(x) < 0 ? "(" + x.get_str() + ")" : x.get_str(); }

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

Integer int_field(const json& j, const char* key, const std::string& where) {
  return integer_from_json(require(j, key, where), where + "." + key);
}

std::string id_field(const json& j, const std::string& fallback) {
  if (j.is_object() && j.contains("id")) {
    if (!j.at("id").is_string()) throw ParseError(fallback + ".id: expected a string");
    return j.at("id").get<std::string>();
  }
  return fallback;
}

bool bool_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) throw ParseError(where + "." + key + ": expected a boolean");
  return j.at(key).get<bool>();
}

const json& array_field(const json& j, const char* key, const std::string& where) {
  const json& a = require(j, key, where);
  if (!a.is_array()) throw ParseError(where + "." + key + ": expected an array");
  return a;
}

std::vector<Integer> int_list(const json& a, const std::string& where) {
  if (!a.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Integer> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(integer_from_json(a[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

json int_list_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

SeifertFillingR5 filling_r5_from_json(const json& j, const std::string& where) {
  SeifertFillingR5 f{id_field(j, where), int_field(j, "sigma", where), int_field(j, "cusps_algebraic", where),
                     std::nullopt};
  if (j.contains("cusps_per_component"))
    f.cusps_per_component = int_list(j.at("cusps_per_component"), where + ".cusps_per_component");
  return f;
}

ClosedMapRecordR5 closed_r5_from_json(const json& j, const std::string& where) {
  ClosedMapRecordR5 r{id_field(j, where), int_field(j, "sigma", where), int_field(j, "cusps_algebraic", where),
                      std::nullopt, bool_field(j, "is_spin", where)};
  if (j.contains("cusps_per_component"))
    r.cusps_per_component = int_list(j.at("cusps_per_component"), where + ".cusps_per_component");
  return r;
}

std::string check_mark(bool ok) { return ok ? "✓" : "✗"; }

json report_json(const std::string& command, int exit_code) {
  return json{{"command", command}, {"exit_code", exit_code}};
}

}  // namespace

// -------------------------------------------------------------- file formats

ManifoldFile manifold_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("manifold: expected a JSON object");
  ManifoldFile m;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("manifold.name: expected a string");
    m.presentation.name = j.at("name").get<std::string>();
  }
  const json& rows = array_field(j, "linking_matrix", "manifold");
  std::vector<std::vector<Integer>> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    entries.push_back(int_list(rows[r], "manifold.linking_matrix[" + std::to_string(r) + "]"));
    if (entries.back().size() != rows.size())
      throw AsymmetricMatrix("manifold.linking_matrix: row " + std::to_string(r) + " has " +
                             std::to_string(entries.back().size()) + " entries, expected " +
                             std::to_string(rows.size()));
  }
  m.presentation.q = IntSymMatrix(IntMatrix::from_rows(entries));

  if (j.contains("spin_boundary_signatures")) {
    const json& sbs = j.at("spin_boundary_signatures");
    if (!sbs.is_object()) throw ParseError("manifold.spin_boundary_signatures: expected an object");
    const auto h = homology_profile(m.presentation);
    SpinBoundarySignatures sig;
    for (const auto& [key, value] : sbs.items()) {
      const auto coset = Gamma2Element::parse(key, h.gamma2_rank);
      auto& list = sig.per_coset[coset];
      for (auto& s : int_list(value, "manifold.spin_boundary_signatures." + key)) {
        embedding_invariant(s, h);  // parity check
        list.push_back(std::move(s));
      }
    }
    m.spin_boundary_signatures = std::move(sig);
  }
  return m;
}

json manifold_to_json(const ManifoldFile& m) {
  json rows = json::array();
  const auto& q = m.presentation.q;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < q.dim(); ++k) row.push_back(integer_to_json(q(i, k)));
    rows.push_back(std::move(row));
  }
  json j{{"name", m.presentation.name}, {"linking_matrix", rows}};
  if (m.spin_boundary_signatures) {
    json sbs = json::object();
    for (const auto& [coset, sigs] : m.spin_boundary_signatures->per_coset) sbs[coset.to_string()] = int_list_json(sigs);
    j["spin_boundary_signatures"] = sbs;
  }
  return j;
}

SeifertDataFile seifert_data_from_json(const json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ParseError("seifert data: expected a JSON object");
  SeifertDataFile d;
  const json& man = require(j, "manifold", "seifert data");
  if (man.is_string()) {
    d.manifold = load_manifold(base_dir / man.get<std::string>());
  } else {
    d.manifold = manifold_from_json(man);
  }

  if (j.contains("fillings_r5")) {
    const json& a = array_field(j, "fillings_r5", "seifert data");
    for (std::size_t k = 0; k < a.size(); ++k)
      d.fillings_r5.push_back(filling_r5_from_json(a[k], "fillings_r5[" + std::to_string(k) + "]"));
  }
  if (j.contains("fillings_r6")) {
    const json& a = array_field(j, "fillings_r6", "seifert data");
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::string where = "fillings_r6[" + std::to_string(k) + "]";
      d.fillings_r6.push_back(SeifertFillingR6{id_field(a[k], where), int_field(a[k], "sigma", where),
                                               int_field(a[k], "triple_points", where),
                                               int_field(a[k], "singular_linking", where)});
    }
  }
  if (j.contains("double_data")) d.double_data = ImmersionDoubleData{int_field(j.at("double_data"), "big_l", "double_data")};

  if (j.contains("closed_records")) {
    const json& c = j.at("closed_records");
    if (!c.is_object()) throw ParseError("closed_records: expected an object");
    auto& out = d.closed_records;
    if (c.contains("r5")) {
      const json& a = array_field(c, "r5", "closed_records");
      for (std::size_t k = 0; k < a.size(); ++k)
        out.r5.push_back(closed_r5_from_json(a[k], "closed_records.r5[" + std::to_string(k) + "]"));
    }
    if (c.contains("r6")) {
      const json& a = array_field(c, "r6", "closed_records");
      for (std::size_t k = 0; k < a.size(); ++k) {
        const std::string where = "closed_records.r6[" + std::to_string(k) + "]";
        out.r6.push_back(ClosedMapRecordR6{id_field(a[k], where), int_field(a[k], "sigma", where),
                                           int_field(a[k], "triple_points", where),
                                           int_field(a[k], "singular_linking", where)});
      }
    }
    if (c.contains("partitions")) {
      const json& a = array_field(c, "partitions", "closed_records");
      for (std::size_t k = 0; k < a.size(); ++k) {
        const std::string where = "closed_records.partitions[" + std::to_string(k) + "]";
        const auto parts = int_list(require(a[k], "part_cusps", where), where + ".part_cusps");
        if (parts.size() != 2) throw ParseError(where + ".part_cusps: expected two entries");
        out.partitions.push_back(PartitionRecord{id_field(a[k], where),
                                                 closed_r5_from_json(require(a[k], "ambient", where), where + ".ambient"),
                                                 {parts[0], parts[1]},
                                                 bool_field(a[k], "null_homologous", where),
                                                 bool_field(a[k], "disjoint_from_double_points", where)});
      }
    }
    if (c.contains("signature_pairs")) {
      const json& a = array_field(c, "signature_pairs", "closed_records");
      for (std::size_t k = 0; k < a.size(); ++k) {
        const std::string where = "closed_records.signature_pairs[" + std::to_string(k) + "]";
        out.signature_pairs.push_back({id_field(a[k], where), int_field(a[k], "s1", where), int_field(a[k], "s2", where)});
      }
    }
    if (c.contains("tracks")) {
      const json& a = array_field(c, "tracks", "closed_records");
      for (std::size_t k = 0; k < a.size(); ++k) {
        const std::string where = "closed_records.tracks[" + std::to_string(k) + "]";
        out.tracks.push_back({id_field(a[k], where), int_field(a[k], "l_before", where),
                              int_field(a[k], "l_after", where), int_field(a[k], "triple_points", where)});
      }
    }
  }
  return d;
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ManifoldFile load_manifold(const fs::path& path) { return manifold_from_json(read_json_file(path)); }

SeifertDataFile load_seifert_data(const fs::path& path) {
  return seifert_data_from_json(read_json_file(path), path.parent_path());
}

// ------------------------------------------------------------------ guarding

Report guarded(const std::string& command, const std::function<Report()>& body) {
  auto fail = [&](const std::string& kind, const std::string& what, int code) {
    Report r;
    r.exit_code = code;
    r.data = report_json(command, code);
    r.data["error"] = {{"kind", kind}, {"message", what}};
    r.text = kind + ": " + what + "\n";
    return r;
  };
  try {
    return body();
  } catch (const ParityError& e) {
    return fail("ParityError", e.what(), kIdentityFailure);
  } catch (const ParityViolation& e) {
    return fail("ParityViolation", e.what(), kIdentityFailure);
  } catch (const ParseError& e) {
    return fail("ParseError", e.what(), kInputError);
  } catch (const AsymmetricMatrix& e) {
    return fail("AsymmetricMatrix", e.what(), kInputError);
  } catch (const CosetUncovered& e) {
    return fail("CosetUncovered", e.what(), kInputError);
  } catch (const WuMismatch& e) {
    return fail("WuMismatch", e.what(), kInputError);
  } catch (const MissingData& e) {
    return fail("MissingData", e.what(), kInputError);
  } catch (const HypothesisViolated& e) {
    return fail("HypothesisViolated", e.what(), kInputError);
  } catch (const InvalidRecord& e) {
    return fail("InvalidRecord", e.what(), kInputError);
  } catch (const Error& e) {
    return fail("Error", e.what(), kInputError);
  }
}

// ------------------------------------------------------------------ analyze

namespace {

std::string classes_phrase(std::size_t alpha) {
  if (alpha == 0) return "Γ₂ = 0, classes ≅ ℤ";
  std::ostringstream out;
  out << "|Γ₂| = " << (std::size_t{1} << alpha) << ", classes ≅ ";
  if (alpha == 1)
    out << "ℤ₂ × ℤ";
  else
    out << "(ℤ₂)^" << alpha << " × ℤ";
  return out.str();
}

}  // namespace

Report cmd_analyze(const fs::path& path) {
  const auto m = load_manifold(path);
  const auto& p = m.presentation;
  const auto snf = smith_normal_form(p.q.matrix());
  const auto h = homology_profile(p);
  const auto spins = spin_structures(p);
  const auto elements = gamma2_elements(h);
  const std::size_t gamma2_order = std::size_t{1} << h.alpha;

  Report r;
  r.data = report_json("analyze", kPass);
  r.data["name"] = p.name;
  r.data["link_components"] = p.q.dim();
  r.data["betti1"] = h.betti1;
  r.data["invariant_factors"] = int_list_json(snf.invariant_factors);
  r.data["torsion_factors"] = int_list_json(h.torsion_factors);
  r.data["alpha"] = h.alpha;
  r.data["gamma2_order"] = gamma2_order;
  r.data["spin_structures"] = spins.size();
  r.data["trace_signature"] = signature_of_trace(p);
  r.data["even_presentation"] = is_even_presentation(p);
  json comps = json::array();
  for (const auto& g : elements) comps.push_back(g.to_string());
  r.data["components"] = comps;

  std::ostringstream t;
  t << "manifold: " << (p.name.empty() ? "(unnamed)" : p.name) << " (" << p.q.dim() << (p.q.dim() == 1 ? " link component)\n" : " link components)\n");
  t << "H_1: betti1 = " << h.betti1 << ", torsion = ";
  if (h.torsion_factors.empty()) {
    t << "none";
  } else {
    for (std::size_t k = 0; k < h.torsion_factors.size(); ++k) t << (k ? " ⊕ " : "") << "ℤ/" << h.torsion_factors[k];
  }
  t << "\n";
  t << "α = " << h.alpha << ", |Γ₂| = 2^" << h.alpha << " = " << gamma2_order << "\n";
  t << "spin structures: " << spins.size() << " = 2^(" << h.betti1 << "+" << h.alpha << ")\n";
  t << "trace 4-manifold: signature " << signature_of_trace(p) << (is_even_presentation(p) ? ", spin" : ", not spin")
    << "\n";
  t << classes_phrase(h.alpha) << ", spin structures: " << spins.size() << "\n";
  t << "Imm[M³,ℝ⁵]₀ ≅ Γ₂ × ℤ; components:";
  for (const auto& g : elements) t << " " << g.to_string();
  t << "\n";
  r.text = t.str();
  return r;
}

// ---------------------------------------------------------------- invariant

Report cmd_invariant(const fs::path& path, InvariantKind which) {
  const auto d = load_seifert_data(path);
  const auto h = homology_profile(d.manifold.presentation);
  const bool want_a = which != InvariantKind::kIb;
  const bool want_b = which != InvariantKind::kIa;

  if (want_a && which == InvariantKind::kIa && d.fillings_r5.empty())
    throw MissingData("no fillings_r5 records for i_a");
  if (want_b && which == InvariantKind::kIb && d.fillings_r6.empty())
    throw MissingData("no fillings_r6 records for i_b");
  if (want_b && !d.fillings_r6.empty() && !d.double_data)
    throw MissingData("i_b needs double_data.big_l");
  if (d.fillings_r5.empty() && d.fillings_r6.empty()) throw MissingData("no Seifert fillings in " + path.string());

  Report r;
  r.data = report_json("invariant", kPass);
  r.data["manifold"] = d.manifold.presentation.name;
  r.data["alpha"] = h.alpha;
  std::ostringstream t;
  t << "manifold: " << d.manifold.presentation.name << " (α = " << h.alpha << ")\n";

  std::vector<Integer> values;
  json ia = json::array();
  if (want_a)
    for (const auto& f : d.fillings_r5) {
      const Integer v = i_a(f, h);
      values.push_back(v);
      ia.push_back({{"id", f.id}, {"i_a", integer_to_json(v)}});
      t << "i_a[" << f.id << "] = 3/2(" << term(f.sigma) << " - " << h.alpha << ") + 1/2·" << term(f.cusps_algebraic)
        << " = " << v
        << "\n";
    }
  json ib = json::array();
  if (want_b)
    for (const auto& f : d.fillings_r6) {
      const Integer v = i_b(f, *d.double_data, h);
      values.push_back(v);
      ib.push_back({{"id", f.id}, {"i_b", integer_to_json(v)}});
      t << "i_b[" << f.id << "] = 3/2(" << term(f.sigma) << " - " << h.alpha << ") + 1/2(3·" << term(f.triple_points)
        << " - 3·" << term(f.singular_linking) << " + " << term(d.double_data->big_l) << ") = " << v << "\n";
    }
  r.data["i_a"] = ia;
  r.data["i_b"] = ib;

  bool consistent = true;
  for (const auto& v : values) consistent = consistent && v == values.front();
  r.data["consistent"] = consistent;
  if (consistent) {
    r.data["i"] = integer_to_json(values.front());
    t << "i = " << values.front() << "\n";
  }
  t << "consistency (all fillings agree): " << check_mark(consistent) << "\n";

  bool residues_ok = true;
  if (d.double_data) {
    json res = json::array();
    for (const auto& f : d.fillings_r5) {
      const bool ok = check_cusp_residue(f, *d.double_data);
      residues_ok = residues_ok && ok;
      Integer rem;
      mpz_fdiv_r_ui(rem.get_mpz_t(), f.cusps_algebraic.get_mpz_t(), 3);
      res.push_back({{"id", f.id}, {"cusps_mod_3", rem.get_ui()}, {"ok", ok}});
      t << "cusp residue[" << f.id << "]: " << f.cusps_algebraic << " ≡ " << rem << " (mod 3), L = "
        << d.double_data->big_l << ": " << check_mark(ok) << "\n";
    }
    r.data["cusp_residues"] = res;
  }
  r.exit_code = consistent && residues_ok ? kPass : kIdentityFailure;
  r.data["exit_code"] = r.exit_code;
  r.text = t.str();
  return r;
}

// ---------------------------------------------------------------------- act

Report cmd_act(const fs::path& path, const std::string& wu, const Integer& i, const Integer& omega) {
  const auto m = load_manifold(path);
  const auto h = homology_profile(m.presentation);
  const RegHomotopyClass f{Gamma2Element::parse(wu, h.gamma2_rank), i};
  const auto result = connected_sum_act(f, SmaleClass{omega});

  Report r;
  r.data = report_json("act", kPass);
  r.data["wu"] = result.wu.to_string();
  r.data["i_before"] = integer_to_json(i);
  r.data["omega"] = integer_to_json(omega);
  r.data["i"] = integer_to_json(result.i);
  std::ostringstream t;
  t << "(" << f.wu.to_string() << ", " << f.i << ") ♯ " << omega << " = (" << result.wu.to_string() << ", " << result.i
    << ")\n";
  if (m.spin_boundary_signatures) {
    const auto e = embedding_classes(h, *m.spin_boundary_signatures);
    const bool emb = is_embedding_class(result, e);
    r.data["embedding_class"] = emb;
    t << "embedding class: " << (emb ? "yes" : "no") << "\n";
  }
  r.text = t.str();
  return r;
}

// --------------------------------------------------------------- embeddings

Report cmd_embeddings(const fs::path& path) {
  const auto m = load_manifold(path);
  if (!m.spin_boundary_signatures)
    throw MissingData(path.string() + " has no spin_boundary_signatures block");
  const auto h = homology_profile(m.presentation);
  const auto e = embedding_classes(h, *m.spin_boundary_signatures);

  Report r;
  r.data = report_json("embeddings", kPass);
  r.data["alpha"] = h.alpha;
  json per = json::object();
  std::ostringstream t;
  t << "embedding classes of " << m.presentation.name << " (i mod 24 per Wu coset):\n";
  for (const auto& [coset, offs] : e.offsets_mod_24) {
    per[coset.to_string()] = {{"offsets_mod_24", offs}, {"description", e.describe(coset)}};
    t << "  wu = " << coset.to_string() << ": i ∈ " << e.describe(coset) << "\n";
  }
  r.data["cosets"] = per;
  r.text = t.str();
  return r;
}

// ------------------------------------------------------------------- verify

namespace {

struct CheckList {
  json items = json::array();
  std::ostringstream text;
  bool all_ok = true;

  void add(const std::string& name, bool ok, const std::string& detail = {}) {
    items.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
    text << check_mark(ok) << " " << name;
    if (!detail.empty()) text << ": " << detail;
    text << "\n";
    all_ok = all_ok && ok;
  }

  Report finish(const std::string& command) {
    Report r;
    r.exit_code = all_ok ? kPass : kIdentityFailure;
    r.data = report_json(command, r.exit_code);
    r.data["checks"] = items;
    r.data["passed"] = all_ok;
    r.text = text.str();
    return r;
  }
};

template <class F>
void add_guarded(CheckList& list, const std::string& name, F&& f) {
  try {
    auto [ok, detail] = f();
    list.add(name, ok, detail);
  } catch (const Error& e) {
    list.add(name, false, e.what());
  }
}

}  // namespace

Report cmd_verify_file(const fs::path& path) {
  const auto d = load_seifert_data(path);
  const auto h = homology_profile(d.manifold.presentation);
  CheckList list;

  if (d.manifold.spin_boundary_signatures)
    add_guarded(list, "spin-boundary signatures cover Γ₂ with correct parity", [&] {
      embedding_classes(h, *d.manifold.spin_boundary_signatures);
      return std::pair{true, std::string{}};
    });

  std::vector<std::pair<std::string, Integer>> values;
  for (const auto& f : d.fillings_r5)
    add_guarded(list, "i_a integral [" + f.id + "]", [&] {
      values.emplace_back(f.id, i_a(f, h));
      return std::pair{true, "i_a = " + display(values.back().second)};
    });
  for (const auto& f : d.fillings_r6)
    add_guarded(list, "i_b integral [" + f.id + "]", [&] {
      if (!d.double_data) throw MissingData("double_data.big_l is required for i_b");
      values.emplace_back(f.id, i_b(f, *d.double_data, h));
      return std::pair{true, "i_b = " + display(values.back().second)};
    });
  if (values.size() > 1) {
    bool same = true;
    for (const auto& v : values) same = same && v.second == values.front().second;
    list.add("i_a = i_b across all fillings", same);
  }

  for (std::size_t a = 0; a < d.fillings_r5.size(); ++a)
    for (std::size_t b = a + 1; b < d.fillings_r5.size(); ++b) {
      const auto& f = d.fillings_r5[a];
      const auto& g = d.fillings_r5[b];
      const ClosedMapRecordR5 glued{f.id + " ∪ -" + g.id, f.sigma - g.sigma, f.cusps_algebraic - g.cusps_algebraic,
                                    std::nullopt, false};
      list.add("glued R5 identity [" + glued.id + "]", check_closed_r5(glued),
               "#Σ¹¹ + 3σ = " + display(glued.cusps_algebraic + 3 * glued.sigma));
    }
  for (std::size_t a = 0; a < d.fillings_r6.size(); ++a)
    for (std::size_t b = a + 1; b < d.fillings_r6.size(); ++b) {
      const auto& f = d.fillings_r6[a];
      const auto& g = d.fillings_r6[b];
      const ClosedMapRecordR6 glued{f.id + " ∪ -" + g.id, f.sigma - g.sigma, f.triple_points - g.triple_points,
                                    f.singular_linking - g.singular_linking};
      list.add("glued R6 identity [" + glued.id + "]", check_closed_r6(glued),
               "σ - l + t = " + display(glued.sigma - glued.singular_linking + glued.triple_points));
    }
  if (d.double_data)
    for (const auto& f : d.fillings_r5)
      list.add("cusp residue mod 3 [" + f.id + "]", check_cusp_residue(f, *d.double_data));

  const auto& c = d.closed_records;
  for (const auto& r : c.r5) {
    list.add("closed R5 #Σ¹¹ + 3σ = 0 [" + r.id + "]", check_closed_r5(r));
    if (r.is_spin && r.cusps_per_component)
      add_guarded(list, "spin: even cusps per component [" + r.id + "]",
                  [&] { return std::pair{check_spin_even_components(r), std::string{}}; });
  }
  for (const auto& r : c.r6) list.add("closed R6 σ - l + t = 0 [" + r.id + "]", check_closed_r6(r));
  for (const auto& p : c.partitions)
    add_guarded(list, "partition cusps divisible by 6 [" + p.id + "]",
                [&] { return std::pair{check_partition_divisibility(p), std::string{}}; });
  for (const auto& s : c.signature_pairs)
    list.add("regularly homotopic embeddings have equal signatures [" + s.id + "]",
             check_equal_signatures_if_reg_homotopic(s.s1, s.s2));
  for (const auto& tr : c.tracks)
    list.add("L(f) = L_ν(F) + 3t(H) [" + tr.id + "]", track_correction(tr.l_before, tr.l_after, tr.triple_points));

  if (list.items.empty()) throw MissingData(path.string() + " contains nothing to verify");
  auto r = list.finish("verify");
  r.data["file"] = path.string();
  return r;
}

Report cmd_verify_corollaries() {
  CheckList list;

  const auto summand = t3_summand_not_embeddable();
  list.add("T3 summand: Ω(h)=" + display(summand.h.omega) + " ∉ 24ℤ",
           summand.h.omega == 12 && !summand.h_embeddable, summand.chain);

  bool all_matched = true;
  json rows = json::array();
  for (long k = -10; k <= 10; ++k) {
    const auto row = t3_absorption(k);
    all_matched = all_matched && row.matched && row.i_e_sharp_h == 12 * (k + 1);
    rows.push_back({{"k", k},
                    {"i", integer_to_json(row.i_e_sharp_h)},
                    {"n", row.n},
                    {"via", row.uses_f8 ? "F8 # e_n" : "F0 # e_n"},
                    {"matched", row.matched}});
  }
  list.add("T3 absorption: all k in [-10,10] matched", all_matched, "i(E ♯ h) = 12(k+1)");

  bool sweep_ok = true;
  for (long sigma = -160; sigma <= 160; sigma += 8) {
    const Integer omega = s3_embedding_smale(sigma).omega;
    const bool in24 = mpz_divisible_ui_p(omega.get_mpz_t(), 24) != 0;
    sweep_ok = sweep_ok && in24 == (sigma % 16 == 0);
  }
  list.add("S3 embeddings: σ ∈ 16ℤ ↦ Ω ∈ 24ℤ, σ ∈ 16ℤ+8 ↦ Ω ∉ 24ℤ on [-160,160]", sweep_ok);

  auto r = list.finish("verify --corollaries");
  r.data["t3_absorption"] = rows;
  r.data["t3_summand_chain"] = summand.chain;
  return r;
}

Report cmd_verify_oracles(std::uint64_t seed) {
  const std::vector<OracleReport> reports = {
      oracle_parity_lemma(500, 6, seed), oracle_snf(500, 6, seed), oracle_signature(500, 6, seed),
      property_ia_ib_coincidence(1000, seed), property_gluing(500, seed)};
  CheckList list;
  json details = json::array();
  std::ostringstream summary;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& o = reports[k];
    const std::size_t ok = o.trials - o.failures;
    std::string detail;
    for (const auto& s : o.failure_samples) detail += s + "; ";
    list.add(o.name + ": " + std::to_string(ok) + "/" + std::to_string(o.trials), o.passed(), detail);
    details.push_back({{"name", o.name}, {"trials", o.trials}, {"failures", o.failures}, {"samples", o.failure_samples}});
    summary << (k ? "; " : "") << o.name << ": " << ok << "/" << o.trials << " " << check_mark(o.passed());
  }
  auto r = list.finish("verify --oracles");
  r.data["seed"] = seed;
  r.data["oracles"] = details;
  r.text += summary.str() + "\n";
  return r;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("IMM5_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw ParseError(std::string("IMM5_SEED is not an integer: ") + env);
    return v;
  }
  return kDefaultSeed;
}

}  // namespace imm5::cli
