#include "homsol/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace homsol {

namespace {

using ordered_json = nlohmann::ordered_json;

Rat rat_from_json(const nlohmann::json& j, bool float_ok, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long long>());
  if (j.is_number_float()) {
    if (!float_ok)
      throw std::invalid_argument(where + ": floating-point literal requires --mode float");
    return Rat(j.get<double>());  // exact binary value
  }
  throw std::invalid_argument(where + ": expected a rational");
}

QVec vec_from_json(const nlohmann::json& j, int dim, bool float_ok, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw std::invalid_argument(where + ": expected an array of length " + std::to_string(dim));
  QVec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rat_from_json(j[i], float_ok, where);
  return v;
}

QMat basis_from_json(const nlohmann::json& j, int dim, bool float_ok, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
  QMat m(dim, static_cast<int>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    const auto& e = j[c];
    if (e.is_number_integer() || e.is_number_unsigned()) {
      int idx = e.get<int>();
      if (idx < 0 || idx >= dim) throw std::invalid_argument(where + ": basis index out of range");
      m(idx, static_cast<int>(c)) = 1;
    } else {
      m.set_column(static_cast<int>(c), vec_from_json(e, dim, float_ok, where));
    }
  }
  return m;
}

ordered_json rat_json(const Rat& x) { return rat_to_string(x); }

ordered_json mat_json(const QMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string usage() {
  return "usage: homsol <check|solvsoliton|nilradical|derivations> <file> | tables | "
         "scan <family> | milnor-scan [default]\n"
         "flags: --mode exact|float  --tol <t>  --format human|json  --grid \"a=1,2;b=1/2\"\n";
}

std::map<std::string, std::vector<Rat>> parse_grid(const std::string& spec) {
  std::map<std::string, std::vector<Rat>> grid;
  std::istringstream parts(spec);
  std::string part;
  while (std::getline(parts, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad grid spec: " + part);
    std::string name = part.substr(0, eq);
    std::vector<Rat> vals;
    std::istringstream items(part.substr(eq + 1));
    std::string item;
    while (std::getline(items, item, ',')) vals.push_back(parse_rational(item));
    if (name.empty() || vals.empty()) throw std::invalid_argument("bad grid spec: " + part);
    grid[name] = std::move(vals);
  }
  return grid;
}

struct Options {
  Tolerance tol;
  bool float_mode = false;
  bool json_format = false;
  std::optional<std::string> grid;
  std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args) {
  Options opt;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&](const char* flag) {
      if (++i >= args.size()) throw std::invalid_argument(std::string(flag) + " needs a value");
      return args[i];
    };
    if (a == "--mode") {
      std::string m = value("--mode");
      if (m == "float")
        opt.float_mode = true;
      else if (m != "exact")
        throw std::invalid_argument("--mode must be exact or float");
    } else if (a == "--tol") {
      opt.tol.eps = parse_rational(value("--tol"));
    } else if (a == "--format") {
      std::string f = value("--format");
      if (f == "json")
        opt.json_format = true;
      else if (f != "human")
        throw std::invalid_argument("--format must be human or json");
    } else if (a == "--grid") {
      opt.grid = value("--grid");
    } else if (!a.empty() && a[0] == '-') {
      throw std::invalid_argument("unknown flag: " + a);
    } else {
      opt.positional.push_back(a);
    }
  }
  if (opt.float_mode && !opt.tol.eps) opt.tol.eps = Rat(1, 1000000000);
  if (!opt.float_mode && opt.tol.eps) throw std::invalid_argument("--tol requires --mode float");
  return opt;
}

ParsedInput parse_document(const nlohmann::json& doc, Tolerance tol, bool float_mode) {
  if (!doc.is_object()) throw std::invalid_argument("document: expected an object");
  if (doc.contains("schema") && doc["schema"] != 1)
    throw std::invalid_argument("schema: unsupported version");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw std::invalid_argument("dim: required integer");
  int dim = doc["dim"].get<int>();
  if (dim < 0) throw std::invalid_argument("dim: must be nonnegative");

  std::vector<std::string> names;
  if (doc.contains("basis")) {
    for (const auto& n : doc["basis"]) names.push_back(n.get<std::string>());
    if (static_cast<int>(names.size()) != dim)
      throw std::invalid_argument("basis: expected " + std::to_string(dim) + " names");
  } else {
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  }

  std::vector<std::tuple<int, int, QVec>> brackets;
  if (doc.contains("brackets")) {
    int bi = 0;
    for (const auto& b : doc["brackets"]) {
      std::string where = "brackets[" + std::to_string(bi++) + "]";
      if (!b.is_array() || b.size() != 3) throw std::invalid_argument(where + ": expected [i, j, coeffs]");
      int i = b[0].get<int>(), j = b[1].get<int>();
      if (i < 0 || i >= dim || j < 0 || j >= dim)
        throw std::invalid_argument(where + ": index out of range");
      brackets.emplace_back(i, j, vec_from_json(b[2], dim, float_mode, where));
    }
  }

  ParsedInput parsed;
  parsed.tol = tol;
  parsed.algebra = LieAlgebra(dim, names, brackets);
  if (jacobi_defect(parsed.algebra) != 0)
    throw std::invalid_argument("brackets: structure constants violate the Jacobi identity");

  if (!doc.contains("gram")) throw std::invalid_argument("gram: required");
  bool has_split = doc.contains("k") || doc.contains("h") || doc.contains("n");
  if (has_split) {
    MRD mrd;
    mrd.g = parsed.algebra;
    mrd.tol = tol;
    mrd.k_basis = basis_from_json(doc.value("k", nlohmann::json::array()), dim, float_mode, "k");
    mrd.h_basis = basis_from_json(doc.value("h", nlohmann::json::array()), dim, float_mode, "h");
    mrd.n_basis = basis_from_json(doc.value("n", nlohmann::json::array()), dim, float_mode, "n");
    int dp = mrd.dp();
    QMat gram(dp, dp);
    const auto& gj = doc["gram"];
    if (!gj.is_array() || static_cast<int>(gj.size()) != dp)
      throw std::invalid_argument("gram: expected a " + std::to_string(dp) + "-row matrix over h+n");
    for (int i = 0; i < dp; ++i) {
      QVec row = vec_from_json(gj[i], dp, float_mode, "gram");
      for (int j = 0; j < dp; ++j) gram(i, j) = row[j];
    }
    mrd.gram = gram;
    parsed.gram = gram;
    try {
      validate_mrd(mrd);
    } catch (const std::invalid_argument& e) {
      std::string msg = e.what();
      if (msg.find("nilradical") != std::string::npos) {
        msg += "; computed nilradical basis:\n" + mat_to_string(nilradical(mrd.g).basis());
      }
      throw std::invalid_argument(msg);
    }
    parsed.mrd = std::move(mrd);
  } else {
    QMat gram(dim, dim);
    const auto& gj = doc["gram"];
    if (!gj.is_array() || static_cast<int>(gj.size()) != dim)
      throw std::invalid_argument("gram: expected a " + std::to_string(dim) + "-row matrix");
    for (int i = 0; i < dim; ++i) {
      QVec row = vec_from_json(gj[i], dim, float_mode, "gram");
      for (int j = 0; j < dim; ++j) gram(i, j) = row[j];
    }
    if (!gram.is_symmetric()) throw std::invalid_argument("gram: not symmetric");
    if (!is_positive_definite(gram)) throw std::invalid_argument("gram: not positive definite");
    parsed.gram = gram;
  }
  return parsed;
}

ParsedInput parse_file(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON syntax error: ") + e.what());
  }
  return parse_document(doc, opt.tol, opt.float_mode);
}

ordered_json certificate_json(const SolitonCertificate& cert) {
  ordered_json j;
  j["verdict"] = to_string(cert.verdict);
  j["c"] = rat_json(cert.c);
  j["sign_class"] = to_string(cert.sign_class);
  ordered_json res;
  for (const auto& [name, r] : cert.residuals) res[name] = rat_json(r);
  j["residuals"] = std::move(res);
  if (cert.D) j["D"] = mat_json(*cert.D);
  if (cert.D1) j["D1"] = mat_json(*cert.D1);
  return j;
}

void print_certificate(std::ostream& out, const SolitonCertificate& cert, bool json_format) {
  if (json_format) {
    ordered_json j;
    j["schema"] = 1;
    j["certificate"] = certificate_json(cert);
    out << j.dump(2) << "\n";
    return;
  }
  out << "verdict: " << to_string(cert.verdict) << "\n";
  out << "c: " << rat_to_string(cert.c) << " (" << to_string(cert.sign_class) << ")\n";
  for (const auto& [name, r] : cert.residuals)
    out << "residual " << name << ": " << rat_to_string(r) << "\n";
  if (cert.D) out << "D:\n" << mat_to_string(*cert.D);
  if (cert.D1) out << "D1 (on n):\n" << mat_to_string(*cert.D1);
}

std::string params_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ", ";
    s += k + "=" + rat_to_string(v);
  }
  return s;
}

int emit_rows(std::ostream& out, const std::vector<TableRow>& rows, bool json_format) {
  bool all_ok = true;
  for (const TableRow& r : rows)
    if (!r.ok) all_ok = false;
  if (json_format) {
    ordered_json j;
    j["schema"] = 1;
    j["status"] = all_ok ? "PASS" : "FAIL";
    ordered_json jr = ordered_json::array();
    for (const TableRow& r : rows) {
      ordered_json row;
      row["family"] = r.family;
      ordered_json pp;
      for (const auto& [k, v] : r.params) pp[k] = rat_json(v);
      row["params"] = std::move(pp);
      row["ok"] = r.ok;
      row["verdict"] = to_string(r.verdict);
      row["c"] = rat_json(r.c);
      if (!r.note.empty()) row["note"] = r.note;
      jr.push_back(std::move(row));
    }
    j["rows"] = std::move(jr);
    out << j.dump(2) << "\n";
  } else {
    for (const TableRow& r : rows) {
      out << (r.ok ? "PASS" : "FAIL") << "  " << r.family << " [" << params_string(r.params)
          << "]  " << to_string(r.verdict) << "  c=" << rat_to_string(r.c);
      if (!r.note.empty()) out << "  (" << r.note << ")";
      out << "\n";
    }
    out << (all_ok ? "PASS" : "FAIL") << " (" << rows.size() << " rows)\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_scan(std::ostream& out, const Options& opt, const std::string& family_name) {
  const FamilySpec& fam = family(family_name);
  std::map<std::string, std::vector<Rat>> grid = fam.default_grid;
  if (opt.grid) {
    for (auto& [k, v] : parse_grid(*opt.grid)) {
      bool known = false;
      for (const std::string& pn : fam.param_names) known = known || pn == k;
      if (!known) throw std::invalid_argument("unknown parameter in grid: " + k);
      grid[k] = v;
    }
  }
  std::vector<Params> points{{}};
  for (const std::string& pn : fam.param_names) {
    std::vector<Params> next;
    for (const Params& base : points)
      for (const Rat& v : grid.at(pn)) {
        Params p = base;
        p[pn] = v;
        next.push_back(std::move(p));
      }
    points = std::move(next);
  }
  std::vector<TableRow> rows;
  for (const Params& p : points) {
    if (!fam.in_domain(p)) continue;
    rows.push_back(run_family_point(fam, p));
  }
  if (rows.empty()) throw std::invalid_argument("scan grid has no in-domain points");
  return emit_rows(out, rows, opt.json_format);
}

int cmd_milnor(std::ostream& out, const Options& opt) {
  std::vector<Rat> as{1, 2, 3, 4}, bs{1, 2, 3, 4}, ds{-1, -2, -3, -4},
      ls{Rat(1, 2), 1, 2, 3};
  if (opt.grid) {
    auto g = parse_grid(*opt.grid);
    if (g.count("a")) as = g["a"];
    if (g.count("b")) bs = g["b"];
    if (g.count("d")) ds = g["d"];
    if (g.count("lambda")) ls = g["lambda"];
  }
  MilnorScanReport rep = milnor_sl2_scan(as, bs, ds, ls);
  bool ok = rep.identity_max_residual == 0 && rep.solutions_with_c_negative == 0 &&
            rep.equal_ab_branch_positive;
  if (opt.json_format) {
    ordered_json j;
    j["schema"] = 1;
    j["status"] = ok ? "PASS" : "FAIL";
    j["points"] = rep.points;
    j["identity_max_residual"] = rat_json(rep.identity_max_residual);
    j["solutions_with_c_negative"] = rep.solutions_with_c_negative;
    j["equal_ab_points"] = rep.equal_ab_points;
    j["equal_ab_branch_positive"] = rep.equal_ab_branch_positive;
    out << j.dump(2) << "\n";
  } else {
    out << "points: " << rep.points << "\n";
    out << "factor identity residual: " << rat_to_string(rep.identity_max_residual) << "\n";
    out << "solutions with c < 0: " << rep.solutions_with_c_negative << "\n";
    out << "a = b branch (c = d^2/2 > 0) points: " << rep.equal_ab_points << "\n";
    out << (ok ? "PASS: no expanding solution\n" : "FAIL\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON syntax error: ") + e.what());
  }
  return parse_document(doc, Tolerance{}, false);
}

std::string serialize_mrd(const MRD& mrd) {
  ordered_json j;
  j["schema"] = 1;
  j["dim"] = mrd.g.dim();
  j["basis"] = mrd.g.basis_names();
  ordered_json br = ordered_json::array();
  for (int i = 0; i < mrd.g.dim(); ++i)
    for (int k = i + 1; k < mrd.g.dim(); ++k) {
      const QVec& v = mrd.g.bracket_basis(i, k);
      if (max_abs(v) == 0) continue;
      ordered_json coeffs = ordered_json::array();
      for (const Rat& c : v) coeffs.push_back(rat_json(c));
      br.push_back(ordered_json::array({i, k, std::move(coeffs)}));
    }
  j["brackets"] = std::move(br);
  auto cols = [](const QMat& m) {
    ordered_json out = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) {
      ordered_json col = ordered_json::array();
      for (int r = 0; r < m.rows(); ++r) col.push_back(rat_json(m(r, c)));
      out.push_back(std::move(col));
    }
    return out;
  };
  j["k"] = cols(mrd.k_basis);
  j["h"] = cols(mrd.h_basis);
  j["n"] = cols(mrd.n_basis);
  j["gram"] = mat_json(mrd.gram);
  j["mode"] = "exact";
  return j.dump(2);
}

int run_command(const std::vector<std::string>& args, std::ostream& out) {
  Options opt;
  try {
    opt = parse_options(args);
    if (opt.positional.empty()) {
      out << usage();
      return 2;
    }
    const std::string& cmd = opt.positional[0];

    if (cmd == "tables") {
      return emit_rows(out, verify_tables().rows, opt.json_format);
    }
    if (cmd == "milnor-scan") {
      // optional literal "default" positional selects the built-in grid
      if (opt.positional.size() > 2 || (opt.positional.size() == 2 && opt.positional[1] != "default")) {
        out << usage();
        return 2;
      }
      return cmd_milnor(out, opt);
    }
    if (cmd == "scan") {
      if (opt.positional.size() != 2) {
        out << usage();
        return 2;
      }
      return cmd_scan(out, opt, opt.positional[1]);
    }

    if (opt.positional.size() != 2) {
      out << usage();
      return 2;
    }
    const std::string& path = opt.positional[1];

    if (cmd == "check") {
      ParsedInput in = parse_file(path, opt);
      if (!in.mrd) throw std::invalid_argument("check: document must declare k, h and n");
      SolitonCertificate cert = check_algebraic_soliton(*in.mrd);
      print_certificate(out, cert, opt.json_format);
      return cert.passed() ? 0 : 1;
    }
    if (cmd == "solvsoliton") {
      ParsedInput in = parse_file(path, opt);
      if (in.mrd)
        throw std::invalid_argument(
            "solvsoliton: document must be a plain metric algebra (no k/h/n)");
      SolitonCertificate cert = check_solvsoliton(in.algebra, in.gram, opt.tol);
      print_certificate(out, cert, opt.json_format);
      return cert.passed() ? 0 : 1;
    }
    if (cmd == "nilradical") {
      if (opt.float_mode)
        throw std::invalid_argument("nilradical: rank decisions are exact only; float mode refused");
      ParsedInput in = parse_file(path, opt);
      Subspace n = nilradical(in.algebra);
      if (opt.json_format) {
        ordered_json j;
        j["schema"] = 1;
        j["dim"] = n.dim();
        j["basis"] = mat_json(n.basis());
        out << j.dump(2) << "\n";
      } else {
        out << "nilradical dimension: " << n.dim() << "\n" << mat_to_string(n.basis());
      }
      return 0;
    }
    if (cmd == "derivations") {
      ParsedInput in = parse_file(path, opt);
      std::vector<QMat> ders = derivation_space(in.algebra);
      if (opt.json_format) {
        ordered_json j;
        j["schema"] = 1;
        j["dim"] = ders.size();
        ordered_json basis = ordered_json::array();
        for (const QMat& d : ders) basis.push_back(mat_json(d));
        j["basis"] = std::move(basis);
        out << j.dump(2) << "\n";
      } else {
        out << "derivation space dimension: " << ders.size() << "\n";
        for (const QMat& d : ders) out << mat_to_string(d) << "\n";
      }
      return 0;
    }

    out << usage();
    return 2;
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace homsol
