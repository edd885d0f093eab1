// Command-line front end.  Subcommands operate on quiver files (and
// representation files where needed) and print deterministic text; exit
// code 0 on success, 1 when a verification run reports failures, 2 on bad
// input of any kind.
#include "qv/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qv::error(qv::errc::bad_argument, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

qv::ValuedQuiver load_quiver(const std::string& path) {
  return qv::parse_quiver(read_file(path));
}

void write_output(const std::string& text, const std::string& dot_path) {
  if (dot_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(dot_path);
  if (!out) throw qv::error(qv::errc::bad_argument, "cannot write file '" + dot_path + "'");
  out << text;
}

std::string sequence_or_empty(const std::vector<int>& verts) {
  return verts.empty() ? std::string("(empty)") : qv::format_sequence(verts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valued quiver and admissible sequence toolkit"};
  app.require_subcommand(1);

  std::string quiver_path, rep_path, seq_a, seq_b, dot_path;
  int rmax = 4, max_len = 6, powers = 12, r_arg = 1, x_arg = 0;
  unsigned seed = 917u;

  auto* canon = app.add_subcommand("canon", "canonical form of an admissible sequence");
  canon->add_option("quiver", quiver_path)->required();
  canon->add_option("sequence", seq_a)->required();

  auto* equiv = app.add_subcommand("equiv", "are two sequences equivalent");
  equiv->add_option("quiver", quiver_path)->required();
  equiv->add_option("first", seq_a)->required();
  equiv->add_option("second", seq_b)->required();

  auto* meet_cmd = app.add_subcommand("meet", "greatest lower bound of two sequences");
  meet_cmd->add_option("quiver", quiver_path)->required();
  meet_cmd->add_option("first", seq_a)->required();
  meet_cmd->add_option("second", seq_b)->required();

  auto* join_cmd = app.add_subcommand("join", "least upper bound of two sequences");
  join_cmd->add_option("quiver", quiver_path)->required();
  join_cmd->add_option("first", seq_a)->required();
  join_cmd->add_option("second", seq_b)->required();

  auto* principal = app.add_subcommand("principal", "principal sequence for (r, x)");
  principal->add_option("quiver", quiver_path)->required();
  principal->add_option("r", r_arg)->required();
  principal->add_option("x", x_arg)->required();

  auto* hasse = app.add_subcommand("hasse", "diagram of principal sequences up to --rmax");
  hasse->add_option("quiver", quiver_path)->required();
  hasse->add_option("--rmax", rmax);
  hasse->add_option("--dot", dot_path);

  auto* slice = app.add_subcommand("slice", "translation quiver slice with --rmax levels");
  slice->add_option("quiver", quiver_path)->required();
  slice->add_option("--rmax", rmax);
  slice->add_option("--dot", dot_path);

  auto* knit = app.add_subcommand("knit", "preprojective dimension vectors up to --rmax");
  knit->add_option("quiver", quiver_path)->required();
  knit->add_option("--rmax", rmax);

  auto* sm = app.add_subcommand("sm", "shortest annihilating sequence of a representation");
  sm->add_option("quiver", quiver_path)->required();
  sm->add_option("representation", rep_path)->required();

  auto* reflect = app.add_subcommand("reflect", "reflect a representation at a sink or source");
  reflect->add_option("quiver", quiver_path)->required();
  reflect->add_option("vertex", x_arg)->required();
  reflect->add_option("representation", rep_path)->required();

  auto* reduced = app.add_subcommand("reduced", "is a word in the Weyl group reduced");
  reduced->add_option("quiver", quiver_path)->required();
  reduced->add_option("word", seq_a)->required();

  auto* coxeter = app.add_subcommand("coxeter", "reducedness of Coxeter element powers");
  coxeter->add_option("quiver", quiver_path)->required();
  coxeter->add_option("--powers", powers);

  auto* verify = app.add_subcommand("verify", "run the property suite against a quiver");
  verify->add_option("quiver", quiver_path)->required();
  verify->add_option("--max-len", max_len);
  verify->add_option("--rmax", rmax);
  verify->add_option("--powers", powers);
  verify->add_option("--seed", seed);

  auto* dot = app.add_subcommand("dot", "DOT graph of the quiver itself");
  dot->add_option("quiver", quiver_path)->required();
  dot->add_option("--dot", dot_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    qv::ValuedQuiver q = load_quiver(quiver_path);

    if (canon->parsed()) {
      qv::AdmissibleSequence s(q, qv::parse_sequence(seq_a));
      std::cout << qv::format_canonical(qv::canonical_form(s)) << "\n";
    } else if (equiv->parsed()) {
      qv::AdmissibleSequence s(q, qv::parse_sequence(seq_a));
      qv::AdmissibleSequence t(q, qv::parse_sequence(seq_b));
      std::cout << (qv::equivalent(s, t) ? "true" : "false") << "\n";
    } else if (meet_cmd->parsed() || join_cmd->parsed()) {
      qv::AdmissibleSequence s(q, qv::parse_sequence(seq_a));
      qv::AdmissibleSequence t(q, qv::parse_sequence(seq_b));
      qv::AdmissibleSequence r = meet_cmd->parsed() ? qv::meet(s, t) : qv::join(s, t);
      std::cout << sequence_or_empty(r.verts()) << "\n";
    } else if (principal->parsed()) {
      qv::AdmissibleSequence s = qv::principal_sequence(q, {r_arg, x_arg});
      std::cout << qv::format_sequence(s.verts()) << "\n";
    } else if (hasse->parsed()) {
      write_output(qv::emit_dot(qv::principal_hasse(q, rmax)), dot_path);
    } else if (slice->parsed()) {
      write_output(qv::emit_dot(qv::build_slice(q, rmax - 1)), dot_path);
    } else if (knit->parsed()) {
      for (const auto& e : qv::knit_preprojectives(q, rmax)) {
        std::cout << "nu=" << e.tag.nu << " x=" << e.tag.x << " dim:";
        for (const auto& [v, d] : e.dims) std::cout << ' ' << v << '=' << d;
        std::cout << "\n";
      }
    } else if (sm->parsed()) {
      qv::Representation rep = qv::parse_representation(read_file(rep_path), q);
      qv::AdmissibleSequence s = qv::shortest_annihilator_bfs(q, rep);
      std::cout << sequence_or_empty(s.verts()) << "\n";
    } else if (reflect->parsed()) {
      qv::Representation rep = qv::parse_representation(read_file(rep_path), q);
      if (q.is_sink(x_arg))
        std::cout << qv::serialize_representation(qv::reflect_plus(x_arg, rep));
      else if (q.is_source(x_arg))
        std::cout << qv::serialize_representation(qv::reflect_minus(x_arg, rep));
      else
        throw qv::error(qv::errc::bad_argument,
                        "vertex " + std::to_string(x_arg) + " is neither a sink nor a source");
    } else if (reduced->parsed()) {
      qv::CartanMatrix cm = qv::cartan_matrix(q);
      std::cout << (qv::is_reduced(cm, qv::parse_sequence(seq_a)) ? "true" : "false") << "\n";
    } else if (coxeter->parsed()) {
      std::cout << "word: " << qv::format_sequence(qv::coxeter_word(q)) << "\n";
      for (auto [m, red] : qv::coxeter_powers_reduced(q, powers))
        std::cout << "m=" << m << ' ' << (red ? "true" : "false") << "\n";
    } else if (verify->parsed()) {
      qv::VerifyLimits lim;
      lim.max_seq_len = max_len;
      lim.r_max = rmax;
      lim.m_max = powers;
      lim.seed = seed;
      qv::VerificationReport report = qv::run_verify(q, lim);
      std::cout << qv::to_text(report);
      return report.all_passed() ? 0 : 1;
    } else if (dot->parsed()) {
      write_output(qv::emit_dot(q), dot_path);
    }
  } catch (const qv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
