// a2web: tableaux, permutations, m-diagrams, A2-webs and flow diagrams from
// the command line. Exit codes: 0 ok, 1 domain error, 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "a2web/algebra.hpp"
#include "a2web/bijection.hpp"
#include "a2web/error.hpp"
#include "a2web/flow.hpp"
#include "a2web/rs_perm.hpp"
#include "a2web/svg.hpp"
#include "a2web/verify.hpp"

namespace {

using namespace a2web;

bool color_enabled() {
  const char* v = std::getenv("A2WEB_COLOR");
  return v != nullptr && std::string(v) == "1";
}

void diagnostic(const std::string& kind, const std::string& msg) {
  if (color_enabled())
    std::cerr << "\x1b[31m" << kind << ":\x1b[0m " << msg << "\n";
  else
    std::cerr << kind << ": " << msg << "\n";
}

// --tableau and --web accept a file name or the literal text
std::string slurp(const std::string& arg) {
  std::ifstream in(arg);
  if (!in.good()) return arg;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// tableau text, or the line format shape=..;type=..;rows=..
Tableau parse_tableau(const std::string& raw) {
  std::string s = strip(raw);
  auto rows_pos = s.find("rows=");
  if (rows_pos == std::string::npos) return Tableau::from_string(s);
  std::string rows = s.substr(rows_pos + 5);
  auto semi = rows.find(';');
  if (semi != std::string::npos) rows = rows.substr(0, semi);
  Tableau t = Tableau::from_string(strip(rows));
  auto shape_pos = s.find("shape=");
  if (shape_pos != std::string::npos) {
    std::string shape = s.substr(shape_pos + 6, s.find(';', shape_pos) - shape_pos - 6);
    std::vector<int> parts;
    std::stringstream ps(shape);
    std::string tok;
    while (std::getline(ps, tok, ',')) parts.push_back(std::stoi(tok));
    if (!(Partition(parts) == t.shape))
      throw ParseError("declared shape does not match rows");
  }
  auto type_pos = s.find("type=");
  if (type_pos != std::string::npos) {
    std::string type = s.substr(type_pos + 5, s.find(';', type_pos) - type_pos - 5);
    TypeMultiset declared;
    std::stringstream ts(type);
    std::string tok;
    while (std::getline(ts, tok, ',')) declared[std::stoi(tok)]++;
    if (declared != t.type()) throw ParseError("declared type does not match rows");
  }
  return t;
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out.good()) throw DomainError("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A2-webs, tableaux and flow diagrams"};
  app.require_subcommand(1);

  int n = 0, k = 0;
  std::string tableau_arg, web_arg, perm_arg, word_arg, svg_arg, flow_arg;
  std::string shape_arg, type_arg;
  bool with_depths = false, with_trace = false;
  unsigned seed = 0;
  int max_n = 3, max_k = 3, max_ell = 6;

  auto* phi_cmd = app.add_subcommand("phi", "web of a semistandard tableau");
  phi_cmd->add_option("--n", n)->required();
  phi_cmd->add_option("--k", k)->required();
  phi_cmd->add_option("--tableau", tableau_arg, "file or literal")->required();
  phi_cmd->add_option("--svg", svg_arg);
  phi_cmd->add_flag("--depths", with_depths);
  phi_cmd->add_flag("--trace", with_trace);
  phi_cmd->add_option("--seed", seed);

  auto* inv_cmd = app.add_subcommand("inverse", "tableau of a web");
  inv_cmd->add_option("--n", n)->required();
  inv_cmd->add_option("--k", k)->required();
  inv_cmd->add_option("--web", web_arg, "file or literal")->required();

  auto* rs_cmd = app.add_subcommand("rs", "Robinson-Schensted pair (R,Q)");
  rs_cmd->add_option("--perm", perm_arg)->required();

  auto* psi_cmd = app.add_subcommand("psi", "depth-difference pair (S+,S-)");
  psi_cmd->add_option("--perm", perm_arg)->required();
  psi_cmd->add_option("--svg", svg_arg);
  psi_cmd->add_flag("--depths", with_depths);

  auto* tl_cmd = app.add_subcommand("tl", "Temperley-Lieb matching of trips");
  tl_cmd->add_option("--perm", perm_arg)->required();

  auto* mul_cmd = app.add_subcommand("multiply", "reduce a word in the generators");
  mul_cmd->add_option("--k", k)->required();
  mul_cmd->add_option("--word", word_arg, "e.g. f1,f2,f1")->required();

  auto* rel_cmd = app.add_subcommand("relations", "check the printed relations");
  rel_cmd->add_option("--k", k)->required();

  auto* flow_cmd = app.add_subcommand("flow", "flow diagram of a tableau");
  flow_cmd->add_option("--n", n)->required();
  flow_cmd->add_option("--k", k)->required();
  flow_cmd->add_option("--tableau", tableau_arg)->required();
  flow_cmd->add_option("--svg", svg_arg);

  auto* enum_cmd = app.add_subcommand("enumerate", "semistandard tableaux");
  enum_cmd->add_option("--shape", shape_arg)->required();
  enum_cmd->add_option("--type", type_arg)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the verification sweeps");
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--max-k", max_k);
  verify_cmd->add_option("--max-ell", max_ell);

  auto* render_cmd = app.add_subcommand("render", "render an object to SVG");
  render_cmd->add_option("--web", web_arg);
  render_cmd->add_option("--mdiagram", word_arg);
  render_cmd->add_option("--perm", perm_arg);
  render_cmd->add_option("--flow", flow_arg);
  render_cmd->add_option("--out", svg_arg)->required();
  render_cmd->add_flag("--depths", with_depths);
  render_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (phi_cmd->parsed()) {
      Tableau t = parse_tableau(slurp(tableau_arg));
      require(t.shape.rows() == n, "tableau shape is not (3^n) for the given n");
      PhiTrace tr = phi_trace(t, k);
      if (with_trace) {
        std::cout << "T+ = " << tr.pair.t_plus.to_string() << "\n";
        std::cout << "T- = " << tr.pair.t_minus.to_string() << "\n";
        std::cout << "M+ = " << tr.m_plus.to_string() << "\n";
        std::cout << "M- = " << tr.m_minus.to_string() << "\n";
        std::cout << "sigma = " << tr.sigma.to_string() << "\n";
      }
      std::cout << tr.web.to_text();
      if (!svg_arg.empty()) write_output(svg_arg, svg_of_web(tr.web, with_depths, seed));
    } else if (inv_cmd->parsed()) {
      Web w = Web::from_text(slurp(web_arg));
      std::cout << phi_inverse(w, n, k).to_string() << "\n";
    } else if (rs_cmd->parsed()) {
      auto [r, q] = rs(Permutation::from_string(perm_arg));
      std::cout << "R = " << r.to_string() << "\n";
      std::cout << "Q = " << q.to_string() << "\n";
    } else if (psi_cmd->parsed()) {
      Permutation sigma = Permutation::from_string(perm_arg);
      auto [sp, sm] = psi(sigma);
      std::cout << "S+ = " << sp.to_string() << "\n";
      std::cout << "S- = " << sm.to_string() << "\n";
      if (!svg_arg.empty())
        write_output(svg_arg, svg_of_perm_diagram(diagram(sigma), with_depths));
    } else if (tl_cmd->parsed()) {
      std::cout << temperley_lieb(Permutation::from_string(perm_arg)).to_string()
                << "\n";
    } else if (mul_cmd->parsed()) {
      std::vector<int> indices;
      std::stringstream ws(word_arg);
      std::string tok;
      while (std::getline(ws, tok, ',')) {
        if (tok.empty()) continue;
        if (tok[0] != 'f') throw ParseError("word entries look like f3");
        indices.push_back(std::stoi(tok.substr(1)));
      }
      std::cout << word_product(indices, k).to_string();
    } else if (rel_cmd->parsed()) {
      bool all = true;
      for (const RelationCheck& c : verify_relations(k)) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.instance
                  << "\n";
        all = all && c.pass;
      }
      return all ? 0 : 1;
    } else if (flow_cmd->parsed()) {
      Tableau t = parse_tableau(slurp(tableau_arg));
      LabeledTriangle d = flow_from_pair(decompose(t, k));
      std::cout << d.to_string() << "\n";
      if (!svg_arg.empty()) write_output(svg_arg, svg_of_flow(d));
    } else if (enum_cmd->parsed()) {
      std::vector<int> parts;
      std::stringstream ps(shape_arg);
      std::string tok;
      while (std::getline(ps, tok, ',')) parts.push_back(std::stoi(tok));
      TypeMultiset type;
      std::stringstream ts(type_arg);
      while (std::getline(ts, tok, ',')) type[std::stoi(tok)]++;
      for (const Tableau& t : enumerate_semistandard(Partition(parts), type))
        std::cout << t.to_string() << "\n";
    } else if (verify_cmd->parsed()) {
      auto results = run_verification(VerifyBounds::from_cli(max_n, max_k, max_ell));
      int failures = 0;
      for (const auto& r : results) {
        std::printf("%s %s (%.1fs): %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.seconds, r.detail.c_str());
        if (!r.pass) ++failures;
      }
      return failures == 0 ? 0 : 1;
    } else if (render_cmd->parsed()) {
      std::string svg;
      if (!web_arg.empty())
        svg = svg_of_web(Web::from_text(slurp(web_arg)), with_depths, seed);
      else if (!word_arg.empty())
        svg = svg_of_m_diagram(MDiagram::from_string(slurp(word_arg)));
      else if (!perm_arg.empty())
        svg = svg_of_perm_diagram(diagram(Permutation::from_string(perm_arg)),
                                  with_depths);
      else if (!flow_arg.empty())
        svg = svg_of_flow(LabeledTriangle::from_string(slurp(flow_arg)));
      else
        throw ParseError("render needs one of --web/--mdiagram/--perm/--flow");
      write_output(svg_arg, svg);
    }
  } catch (const ParseError& e) {
    diagnostic("malformed input", e.what());
    return 2;
  } catch (const DomainError& e) {
    diagnostic("error", e.what());
    return 1;
  } catch (const InternalError& e) {
    diagnostic("internal error", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    diagnostic("malformed input", e.what());
    return 2;
  }
  return 0;
}
