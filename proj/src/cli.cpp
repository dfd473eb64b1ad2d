#include "solv/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "solv/geometry.hpp"
#include "solv/reduction.hpp"

namespace solv {

namespace {

using json = nlohmann::ordered_json;

const char* kCdimCitation =
    "the conformal dimension of the Gromov boundary is a quasiisometry invariant "
    "of negatively curved homogeneous spaces (Pansu)";

std::string default_label(std::size_t i) { return "e" + std::to_string(i + 1); }

std::vector<std::string> bracket_strings(const LieAlgebra& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::string> lines;
  const auto& labels = g.labels();
  auto lbl = [&](std::size_t i) {
    return i < labels.size() && !labels[i].empty() ? labels[i] : default_label(i);
  };
  for (const auto& [key, c] : g.constants()) {
    auto [i, j, k] = key;
    std::string& line = lines[{i, j}];
    if (line.empty()) line = "[" + lbl(i) + "," + lbl(j) + "] =";
    if (c == Rat(1))
      line += " + " + lbl(k);
    else if (c == Rat(-1))
      line += " - " + lbl(k);
    else if (c.sign() < 0)
      line += " - " + (-c).str() + " " + lbl(k);
    else
      line += " + " + c.str() + " " + lbl(k);
  }
  std::vector<std::string> out;
  for (auto& [key, line] : lines) {
    (void)key;
    // tidy a leading " + "
    auto pos = line.find("= + ");
    if (pos != std::string::npos) line.erase(pos + 2, 2);
    out.push_back(line);
  }
  return out;
}

json algebra_json(const LieAlgebra& g) {
  json a;
  a["dim"] = g.dim();
  a["brackets"] = bracket_strings(g);
  return a;
}

json params_json(const ParamMap& p) {
  json out = json::object();
  for (const auto& [k, v] : p) out[k] = v.str();
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json image_json(const LieAlgebra& out_alg) {
  json im;
  SplitResult sp = split_factors(out_alg);
  im["euclidean_dim"] = sp.euclidean_dim;
  im["complete"] = sp.complete;
  json factors = json::array();
  for (const LieAlgebra& f : sp.factors) {
    json fj;
    fj["dim"] = f.dim();
    auto m = match(f);
    if (m) {
      fj["match"] = json{{"name", m->name}, {"params", params_json(m->params)}};
    } else {
      fj["match"] = nullptr;
    }
    factors.push_back(fj);
  }
  im["factors"] = factors;
  return im;
}

std::string tribool_str(TriBool t) {
  return t == TriBool::True ? "true" : t == TriBool::False ? "false" : "unknown";
}

std::string nilkind_str(NilradicalKind k) {
  switch (k) {
    case NilradicalKind::Abelian: return "abelian";
    case NilradicalKind::Heisenberg: return "heisenberg";
    case NilradicalKind::Other: return "other";
  }
  return "?";
}

json verdict_json(const Verdict& v) {
  json out;
  out["verdict"] = verdict_kind_str(v.kind);
  json cert = json::array();
  for (const RuleApplication& r : v.certificate) {
    json rj;
    rj["rule"] = r.rule_id;
    rj["fired"] = r.fired;
    rj["conclusion"] = r.conclusion;
    json in = json::object();
    for (const auto& [k, val] : r.inputs) in[k] = val;
    rj["inputs"] = in;
    rj["citation"] = r.citation;
    cert.push_back(rj);
  }
  out["certificate"] = cert;
  if (v.witness) out["witness"] = matrix_json(*v.witness);
  return out;
}

json report_json(const BatchReport& rep) {
  json out;
  out["title"] = rep.title;
  json rows = json::array();
  for (const RowResult& r : rep.rows) {
    json rj;
    rj["name"] = r.name;
    rj["status"] = r.status == RowStatus::Pass   ? "pass"
                   : r.status == RowStatus::Fail ? "fail"
                                                 : "skipped";
    rj["detail"] = r.detail;
    rows.push_back(rj);
  }
  out["rows"] = rows;
  out["all_ok"] = rep.all_ok();
  return out;
}

struct Options {
  bool json_mode = false;
  bool quiet = false;
  std::string extended_dir;
  std::vector<std::string> positional;
};

struct Loaded {
  AlgebraDocument doc;
  LieAlgebra alg;
};

// Returns nullopt after printing diagnostics (exit code 1 situation).
std::optional<Loaded> load_algebra(const std::string& path, std::ostream& err) {
  ParseResult pr = parse_file(path);
  if (!pr.ok()) {
    for (const Diagnostic& d : pr.diagnostics) err << path << ": " << d.str() << "\n";
    return std::nullopt;
  }
  Loaded l{*pr.doc, pr.doc->to_algebra()};
  ValidationReport vr = validate(l.alg);
  if (!vr.ok) {
    err << path << ": structure constants violate the Jacobi identity: " << vr.message
        << "\n";
    return std::nullopt;
  }
  return l;
}

void emit(const Options& opt, std::ostream& out, const json& report,
          const std::vector<std::string>& text_lines, const std::string& quiet_line) {
  if (opt.json_mode) {
    out << report.dump(2) << "\n";
  } else if (opt.quiet) {
    out << quiet_line << "\n";
  } else {
    for (const std::string& l : text_lines) out << l << "\n";
  }
}

json base_report(const std::string& command, const std::vector<std::string>& inputs) {
  json r;
  r["command"] = command;
  r["inputs"] = inputs;
  r["results"] = json::object();
  r["citations"] = json::array();
  return r;
}

int usage(std::ostream& err) {
  err << "usage: solvqi [--json] [--quiet] [--extended <dir>] <command> <args>\n"
         "commands:\n"
         "  validate <file>      check the Jacobi identity\n"
         "  series <file>        lower central and derived series dimensions\n"
         "  exprad <file>        exponential radical\n"
         "  conedim <file>       cone dimension\n"
         "  rho1 <file>          semisimplified reduction\n"
         "  rhoinf <file>        graded reduction\n"
         "  heintze <file>       diagonal Heintze detection\n"
         "  cdim <file>          conformal dimension of the boundary\n"
         "  split <file>         direct-factor splitting\n"
         "  match <file>         catalog recognition\n"
         "  compare <a> <b>      quasiisometry verdict\n"
         "  table1               extended-catalog reduced-image report\n"
         "  families             family comparison report\n";
  return 1;
}

std::size_t parse_count(const std::string& s) {
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

std::vector<ExtendedEntry> load_extended_dir(const std::string& dir,
                                             std::vector<Diagnostic>& diagnostics) {
  std::vector<ExtendedEntry> entries;
  namespace fs = std::filesystem;
  std::error_code ec;
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir, ec))
    if (de.path().extension() == ".lie") files.push_back(de.path());
  if (ec) {
    diagnostics.push_back({0, 0, "cannot read directory: " + dir});
    return entries;
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    ParseResult pr = parse_file(f.string());
    if (!pr.ok()) {
      for (Diagnostic d : pr.diagnostics) {
        d.message = f.filename().string() + ": " + d.message;
        diagnostics.push_back(d);
      }
      continue;
    }
    ExtendedEntry e;
    e.name = pr.doc->name;
    e.algebra = pr.doc->to_algebra();
    ValidationReport vr = validate(e.algebra);
    if (!vr.ok) {
      diagnostics.push_back({0, 0, f.filename().string() + ": Jacobi identity fails"});
      continue;
    }
    for (const auto& [key, value] : pr.doc->meta) {
      std::istringstream is(value);
      if (key == "conedim") {
        std::size_t c;
        if (is >> c) e.conedim = c;
      } else if (key == "dehn") {
        e.dehn = value;
      } else if (key == "source") {
        e.source = value;
      } else if (key == "image") {
        // <euclidean_dim> <factor_name> [<param>=<value> ...]
        std::size_t k;
        std::string fac, binding;
        if (is >> k >> fac) {
          e.image_euclidean = k;
          e.image_factor = fac;
          while (is >> binding) {
            auto eq = binding.find('=');
            if (eq == std::string::npos) continue;
            auto r = Rat::parse(binding.substr(eq + 1));
            if (r) e.image_params[binding.substr(0, eq)] = *r;
          }
        }
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  const char* env_dir = std::getenv("SOLVQI_EXTENDED_DIR");
  opt.extended_dir = env_dir ? env_dir : "catalog_extended";
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json")
      opt.json_mode = true;
    else if (a == "--quiet")
      opt.quiet = true;
    else if (a == "--extended") {
      if (i + 1 >= args.size()) {
        err << "--extended requires a directory argument\n";
        return 1;
      }
      opt.extended_dir = args[++i];
    } else if (!a.empty() && a[0] == '-') {
      err << "unknown flag: " << a << "\n";
      return usage(err);
    } else {
      opt.positional.push_back(a);
    }
  }
  if (opt.positional.empty()) return usage(err);
  const std::string cmd = opt.positional[0];
  std::vector<std::string> files(opt.positional.begin() + 1, opt.positional.end());

  auto need_files = [&](std::size_t n) {
    if (files.size() != n) {
      err << cmd << " expects " << n << " file argument" << (n == 1 ? "" : "s") << "\n";
      return false;
    }
    return true;
  };

  try {
    if (cmd == "validate") {
      if (!need_files(1)) return 1;
      ParseResult pr = parse_file(files[0]);
      if (!pr.ok()) {
        for (const Diagnostic& d : pr.diagnostics) err << files[0] << ": " << d.str() << "\n";
        return 1;
      }
      LieAlgebra g = pr.doc->to_algebra();
      ValidationReport vr = validate(g);
      json rep = base_report(cmd, {pr.doc->name});
      rep["results"]["ok"] = vr.ok;
      rep["results"]["dim"] = g.dim();
      if (!vr.ok) rep["results"]["violation"] = vr.message;
      std::vector<std::string> lines;
      lines.push_back(pr.doc->name + ": " +
                      (vr.ok ? "valid Lie algebra (Jacobi identity holds)"
                             : "INVALID: " + vr.message));
      emit(opt, out, rep, lines, vr.ok ? "valid" : "invalid");
      return vr.ok ? 0 : 1;
    }

    if (cmd == "series") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      SeriesReport lcs = lower_central_series(l->alg);
      SeriesReport der = derived_series(l->alg);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["lower_central"] = lcs.dims;
      rep["results"]["derived"] = der.dims;
      rep["results"]["nilpotent"] = is_nilpotent(l->alg);
      rep["results"]["solvable"] = is_solvable(l->alg);
      auto dims_str = [](const std::vector<std::size_t>& d) {
        std::string s;
        for (std::size_t i = 0; i < d.size(); ++i)
          s += (i ? " > " : "") + std::to_string(d[i]);
        return s;
      };
      std::vector<std::string> lines = {
          l->doc.name + ":",
          "  lower central series dims: " + dims_str(lcs.dims),
          "  derived series dims:       " + dims_str(der.dims),
          std::string("  nilpotent: ") + (is_nilpotent(l->alg) ? "yes" : "no") +
              ", solvable: " + (is_solvable(l->alg) ? "yes" : "no")};
      emit(opt, out, rep, lines, dims_str(lcs.dims));
      return 0;
    }

    if (cmd == "exprad") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      AlgebraSubspace n = exponential_radical(l->alg);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["dim"] = n.space.dim();
      rep["results"]["basis"] = matrix_json(n.space.basis());
      std::vector<std::string> lines = {
          l->doc.name + ": exponential radical has dimension " +
          std::to_string(n.space.dim())};
      for (std::size_t r = 0; r < n.space.dim(); ++r) {
        std::string row = "  ";
        Vec v = n.space.basis_vector(r);
        for (std::size_t c = 0; c < v.size(); ++c) row += (c ? " " : "") + v[c].str();
        lines.push_back(row);
      }
      emit(opt, out, rep, lines, std::to_string(n.space.dim()));
      return 0;
    }

    if (cmd == "conedim") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      std::size_t c = cone_dimension(l->alg);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["value"] = c;
      emit(opt, out, rep,
           {l->doc.name + ": cone dimension " + std::to_string(c)}, std::to_string(c));
      return 0;
    }

    if (cmd == "rho1" || cmd == "rhoinf") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      ReductionResult r = cmd == "rho1" ? rho1(l->alg) : rho_infinity(l->alg);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["output"] = algebra_json(r.output);
      rep["results"]["exprad_dim"] = r.exprad.dim();
      rep["results"]["quotient_rank"] = r.quotient_rank;
      rep["results"]["image"] = image_json(r.output);
      rep["results"]["log"] = r.construction_log;
      std::vector<std::string> lines = {l->doc.name + ": reduced algebra"};
      for (const std::string& b : bracket_strings(r.output)) lines.push_back("  " + b);
      SplitResult sp = split_factors(r.output);
      std::string image_line = "  image: R^" + std::to_string(sp.euclidean_dim);
      for (const LieAlgebra& f : sp.factors) {
        auto m = match(f);
        image_line += " x ";
        if (m) {
          image_line += m->name;
          if (!m->params.empty()) {
            image_line += "(";
            bool first = true;
            for (const auto& [k, v] : m->params) {
              image_line += (first ? "" : ",") + k + "=" + v.str();
              first = false;
            }
            image_line += ")";
          }
        } else {
          image_line += "unmatched[dim " + std::to_string(f.dim()) + "]";
        }
      }
      lines.push_back(image_line);
      emit(opt, out, rep, lines, image_line.substr(2));
      return 0;
    }

    if (cmd == "heintze") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      HeintzeDetect h = detect_diagonal_heintze(l->alg);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["ok"] = h.ok;
      std::vector<std::string> lines;
      if (!h.ok) {
        rep["results"]["reason"] = h.reason;
        lines.push_back(l->doc.name + ": not a diagonal Heintze algebra (" + h.reason + ")");
        emit(opt, out, rep, lines, "no");
        return 0;
      }
      json spec = json::array();
      std::string spec_str;
      for (const auto& [lam, mult] : h.data.spectrum) {
        spec.push_back(json{{"weight", lam.str()}, {"multiplicity", mult}});
        if (!spec_str.empty()) spec_str += ", ";
        spec_str += lam.str() + ":" + std::to_string(mult);
      }
      SymmetricTag tag = identify_rank_one_iwasawa(h.data);
      SpspReport spsp = strong_pointed_sphere(h.data);
      rep["results"]["spectrum"] = spec;
      rep["results"]["nilradical"] = nilkind_str(h.data.nilradical_kind);
      rep["results"]["generator_flipped"] = h.data.generator_flipped;
      rep["results"]["conformal_dimension"] = conformal_dimension(h.data).str();
      rep["results"]["iwasawa"] = tag.str();
      rep["results"]["spsp"] = tribool_str(spsp.value);
      rep["results"]["spsp_rule"] = spsp.rule;
      rep["citations"].push_back(kCdimCitation);
      lines.push_back(l->doc.name + ": diagonal Heintze algebra");
      lines.push_back("  spectrum: " + spec_str);
      lines.push_back("  nilradical: " + nilkind_str(h.data.nilradical_kind));
      lines.push_back("  conformal dimension: " + conformal_dimension(h.data).str());
      lines.push_back("  Iwasawa type: " + tag.str());
      lines.push_back("  strong pointed sphere: " + tribool_str(spsp.value) + " (" +
                      spsp.rule + ")");
      emit(opt, out, rep, lines, "yes");
      return 0;
    }

    if (cmd == "cdim") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      HeintzeDetect h = detect_diagonal_heintze(l->alg);
      if (!h.ok)
        throw UnsupportedError("conformal dimension needs a diagonal Heintze algebra: " +
                               h.reason);
      Rat c = conformal_dimension(h.data);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["value"] = c.str();
      rep["citations"].push_back(kCdimCitation);
      emit(opt, out, rep, {l->doc.name + ": conformal dimension " + c.str()}, c.str());
      return 0;
    }

    if (cmd == "split") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      SplitResult sp = split_factors(l->alg);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["euclidean_dim"] = sp.euclidean_dim;
      rep["results"]["complete"] = sp.complete;
      json fd = json::array();
      for (const LieAlgebra& f : sp.factors) fd.push_back(f.dim());
      rep["results"]["factor_dims"] = fd;
      rep["results"]["change_of_basis"] = matrix_json(sp.change_of_basis);
      std::string shape = "R^" + std::to_string(sp.euclidean_dim);
      for (const LieAlgebra& f : sp.factors)
        shape += " x F" + std::to_string(f.dim());
      std::vector<std::string> lines = {
          l->doc.name + ": " + shape + (sp.complete ? "" : " (splitting incomplete)")};
      emit(opt, out, rep, lines, shape);
      return 0;
    }

    if (cmd == "match") {
      if (!need_files(1)) return 1;
      auto l = load_algebra(files[0], err);
      if (!l) return 1;
      auto m = match(l->alg);
      json rep = base_report(cmd, {l->doc.name});
      rep["results"]["matched"] = m.has_value();
      std::string line;
      if (m) {
        rep["results"]["name"] = m->name;
        rep["results"]["params"] = params_json(m->params);
        rep["results"]["change_of_basis"] = matrix_json(m->change_of_basis);
        line = m->name;
        if (!m->params.empty()) {
          line += "(";
          bool first = true;
          for (const auto& [k, v] : m->params) {
            line += (first ? "" : ",") + k + "=" + v.str();
            first = false;
          }
          line += ")";
        }
      } else {
        line = "no match";
      }
      emit(opt, out, rep, {l->doc.name + ": " + line}, line);
      return 0;
    }

    if (cmd == "compare") {
      if (!need_files(2)) return 1;
      auto la = load_algebra(files[0], err);
      if (!la) return 1;
      auto lb = load_algebra(files[1], err);
      if (!lb) return 1;
      Verdict v = compare(la->alg, lb->alg);
      json rep = base_report(cmd, {la->doc.name, lb->doc.name});
      rep["results"] = verdict_json(v);
      for (const RuleApplication& r : v.certificate)
        if (r.fired) rep["citations"].push_back(r.citation);
      std::vector<std::string> lines;
      {
        std::istringstream is(v.str());
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
      }
      emit(opt, out, rep, lines, verdict_kind_str(v.kind));
      return 0;
    }

    if (cmd == "table1" || cmd == "families") {
      if (!files.empty()) {
        err << cmd << " takes no file arguments\n";
        return 1;
      }
      std::vector<Diagnostic> diags;
      std::vector<ExtendedEntry> entries = load_extended_dir(opt.extended_dir, diags);
      if (!diags.empty()) {
        for (const Diagnostic& d : diags) err << d.str() << "\n";
        return 1;
      }
      BatchReport br = cmd == "table1" ? table1_report(entries) : family_report(entries);
      // Record only the directory name so reports do not depend on where
      // the tree is checked out.
      json rep = base_report(
          cmd, {std::filesystem::path(opt.extended_dir).filename().string()});
      rep["results"] = report_json(br);
      std::vector<std::string> lines;
      {
        std::istringstream is(br.str());
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
      }
      emit(opt, out, rep, lines, br.all_ok() ? "ok" : "FAIL");
      return br.all_ok() ? 0 : 1;
    }
  } catch (const UnsupportedError& e) {
    err << "unsupported instance: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 3;
  }

  err << "unknown command: " << cmd << "\n";
  return usage(err);
}

}  // namespace solv
