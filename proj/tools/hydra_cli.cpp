#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hydra/bench.hpp"
#include "hydra/engine.hpp"
#include "hydra/free_conj.hpp"
#include "hydra/hnn.hpp"
#include "hydra/oracle.hpp"
#include "hydra/phi.hpp"
#include "hydra/pieces.hpp"
#include "hydra/twisted.hpp"

using namespace hydra;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;

RawWord read_word(const std::string& text, int rank) { return rank > 0 ? parse_word(text, rank) : parse_word(text); }

FWord read_fword(const std::string& text, int rank) {
  RawWord w = read_word(text, rank);
  if (has_stable(w)) throw ParseError("expected a word without s: " + text);
  return free_reduce(w);
}

json certificate_json(const Certificate& c, bool raw) {
  json j;
  j["conjugate"] = c.conjugate;
  j["witness"] = c.witness ? json(to_string(*c.witness)) : json(nullptr);
  if (raw) j["raw_witness"] = c.raw_witness ? json(to_string(*c.raw_witness)) : json(nullptr);
  j["method"] = to_string(c.method);
  j["inconclusive"] = c.inconclusive;
  j["verified"] = c.verified;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

int certificate_exit(const Certificate& c) { return c.inconclusive ? 3 : (c.conjugate ? 0 : 1); }

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ParseError("cannot open " + path);
  return file;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad integer list: " + text);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydra: conjugacy in the hydra groups H_m"};
  app.require_subcommand(1);
  int exit_code = 0;

  // phi
  int rank = 0;
  long power = 1;
  std::string w1, w2;
  auto* phi = app.add_subcommand("phi", "print phi^r(WORD)");
  phi->add_option("--rank", rank, "rank m");
  phi->add_option("--power,-r", power, "exponent r");
  phi->add_option("WORD", w1)->required();
  phi->callback([&] { std::cout << to_string(apply_phi_power(read_fword(w1, rank), power)) << "\n"; });

  long max_power = 10;
  auto* phig = app.add_subcommand("phi-growth", "CSV of |phi^r(a_i)| against the binomial sums");
  phig->add_option("--rank", rank)->required();
  phig->add_option("--max-power", max_power);
  phig->callback([&] {
    std::cout << "i,r,exact_length,binomial_length\n";
    for (int i = 1; i <= rank; ++i)
      for (long r = -max_power; r <= max_power; ++r)
        std::cout << i << ',' << r << ',' << apply_phi_power(FWord{letter_a(i)}, r).size() << ','
                  << letter_image_length(i, r) << '\n';
  });

  int at = 0;
  auto* pieces = app.add_subcommand("pieces", "rank-i piece decomposition");
  pieces->add_option("--rank", rank);
  pieces->add_option("--at", at, "piece rank i (default: rank of the word)");
  pieces->add_option("WORD", w1)->required();
  pieces->callback([&] {
    FWord w = read_fword(w1, rank);
    int i = at > 0 ? at : std::max(1, hydra::rank(w));
    auto d = decompose(w, i);
    for (const auto& p : d.pieces)
      std::cout << to_string(p.type) << "\trank " << p.rank << "\t" << to_string(p.word(w)) << "\n";
  });

  bool as_json = false;
  auto* nf = app.add_subcommand("nf", "normal form u~ | s^p");
  nf->add_option("--rank", rank);
  nf->add_flag("--json", as_json);
  nf->add_option("WORD", w1)->required();
  nf->callback([&] {
    HElem g = normal_form(read_word(w1, rank));
    if (as_json)
      std::cout << json{{"u_tilde", to_string(g.u_tilde)}, {"s_exp", g.s_exp}}.dump() << "\n";
    else
      std::cout << to_string(g.u_tilde) << " | s^" << g.s_exp << "\n";
  });

  auto* eq = app.add_subcommand("eq", "exit 0 when the words are equal in H");
  eq->add_option("--rank", rank);
  eq->add_option("WORD1", w1)->required();
  eq->add_option("WORD2", w2)->required();
  eq->callback([&] {
    bool same = normal_form(read_word(w1, rank)) == normal_form(read_word(w2, rank));
    std::cout << (same ? "equal" : "not equal") << "\n";
    exit_code = same ? 0 : 1;
  });

  auto* fconj = app.add_subcommand("fconj", "conjugacy in the free group");
  fconj->add_option("--rank", rank);
  fconj->add_option("WORD1", w1)->required();
  fconj->add_option("WORD2", w2)->required();
  fconj->callback([&] {
    auto w = conjugate_in_f(read_fword(w1, rank), read_fword(w2, rank));
    std::cout << (w ? to_string(*w) : std::string("not conjugate")) << "\n";
    exit_code = w ? 0 : 1;
  });

  // twisted
  std::string mode;
  long p = 0;
  BoundPolicy policy;
  long cap = -1;
  auto* tw = app.add_subcommand("twisted", "twisted conjugacy: zero, i or h");
  tw->add_option("MODE", mode)->required()->check(CLI::IsMember({"zero", "i", "h"}));
  tw->add_option("--rank", rank);
  tw->add_option("-p", p);
  tw->add_option("--k-mult", policy.k_multiplier);
  tw->add_option("--qp-mult", policy.qp_multiplier);
  tw->add_option("--r-slack", policy.r_slack);
  tw->add_option("--cap", cap);
  tw->add_option("U_TILDE", w1)->required();
  tw->add_option("V_TILDE", w2)->required();
  tw->callback([&] {
    if (cap >= 0) policy.hard_cap = cap;
    FWord u = read_fword(w1, rank), v = read_fword(w2, rank);
    TwistedResult res;
    if (mode == "zero")
      res = solve_0_twisted(u, v, policy);
    else if (mode == "i")
      res = solve_i_twisted(u, v, p);
    else
      res = solve_h_twisted(u, v, p, rank, policy);
    json j{{"found", res.found()}, {"inconclusive", res.status == SolveStatus::Inconclusive}};
    if (res.solution) {
      j["r"] = res.solution->r;
      j["w_tilde"] = res.solution->has_w_tilde ? json(to_string(res.solution->w_tilde)) : json(nullptr);
      j["method"] = to_string(res.solution->method);
      if (!res.solution->conjugator.empty()) j["conjugator"] = to_string(res.solution->conjugator);
    }
    std::cout << j.dump() << "\n";
    exit_code = res.status == SolveStatus::Inconclusive ? 3 : (res.found() ? 0 : 1);
  });

  // conj
  std::string policy_file, batch, method = "engine";
  bool raw = false;
  auto* conj = app.add_subcommand("conj", "decide conjugacy in H_m");
  conj->add_option("--rank", rank);
  conj->add_option("--policy-file", policy_file);
  conj->add_flag("--json", as_json);
  conj->add_flag("--raw", raw, "also report the witness before compression");
  conj->add_option("--method", method)->check(CLI::IsMember({"engine", "hnn"}));
  conj->add_option("--batch", batch, "TSV file with two words per line");
  conj->add_option("WORD1", w1);
  conj->add_option("WORD2", w2);
  conj->callback([&] {
    if (!policy_file.empty()) {
      std::ifstream in(policy_file);
      if (!in) throw ParseError("cannot open " + policy_file);
      std::stringstream ss;
      ss << in.rdbuf();
      policy = parse_policy(ss.str());
    }
    auto run = [&](const RawWord& a, const RawWord& b) {
      return method == "hnn" ? collins_decide(a, b, 0, rank) : decide_conjugacy(a, b, policy, rank);
    };
    if (!batch.empty()) {
      std::ifstream in(batch);
      if (!in) throw ParseError("cannot open " + batch);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("batch line without a tab: " + line);
        Certificate c = run(read_word(line.substr(0, tab), rank), read_word(line.substr(tab + 1), rank));
        std::cout << certificate_json(c, raw).dump() << "\n";
      }
      return;
    }
    if (w1.empty() && w2.empty()) throw CLI::ValidationError("conj", "two words or --batch required");
    Certificate c = run(read_word(w1, rank), read_word(w2, rank));
    if (as_json) {
      std::cout << certificate_json(c, raw).dump() << "\n";
    } else {
      if (c.inconclusive)
        std::cout << "inconclusive (" << c.note << ")\n";
      else if (c.conjugate)
        std::cout << "conjugate via " << to_string(*c.witness) << " [" << to_string(c.method) << "]\n";
      else
        std::cout << "not conjugate [" << to_string(c.method) << "]\n";
      if (raw && c.raw_witness) std::cout << "raw: " << to_string(*c.raw_witness) << "\n";
    }
    exit_code = certificate_exit(c);
  });

  // oracle conj
  int oracle_cap = 6;
  auto* oracle = app.add_subcommand("oracle", "brute-force deciders");
  oracle->require_subcommand(1);
  auto* oconj = oracle->add_subcommand("conj", "shortlex search for a conjugator");
  oconj->add_option("--rank", rank);
  oconj->add_option("--cap", oracle_cap);
  oconj->add_option("WORD1", w1)->required();
  oconj->add_option("WORD2", w2)->required();
  oconj->callback([&] {
    HElem u = normal_form(read_word(w1, rank)), v = normal_form(read_word(w2, rank));
    auto w = oracle_conjugate(u, v, oracle_cap, rank);
    std::cout << (w ? to_string(*w) : std::string("none within cap")) << "\n";
    exit_code = w ? 0 : 1;
  });

  // bench
  std::uint64_t seed = 1;
  int samples = 50;
  std::string out_path, i_list, n_list = "10,20,40,80";
  bool identity = false;
  auto* growth = app.add_subcommand("growth", "growth and distortion CSV");
  growth->add_option("--rank", rank)->required();
  growth->add_option("--i", i_list, "comma-separated generator indices (default 1..m)");
  growth->add_option("--max-power", max_power);
  growth->add_option("--out", out_path);
  growth->callback([&] {
    std::vector<int> is = i_list.empty() ? std::vector<int>{} : parse_int_list(i_list);
    if (is.empty())
      for (int i = 1; i <= rank; ++i) is.push_back(i);
    std::ofstream f;
    write_csv(open_out(out_path, f), run_growth(rank, is, max_power));
  });

  auto add_bench = [&](const char* name, const char* help, bool runtime) {
    auto* b = app.add_subcommand(name, help);
    b->add_option("--rank", rank)->required();
    b->add_option("--seed", seed);
    b->add_option("--samples", samples);
    b->add_option("--n", n_list, "comma-separated sizes");
    b->add_option("--out", out_path);
    b->add_option("--policy-file", policy_file);
    if (!runtime) b->add_flag("--identity", identity, "w = empty");
    b->callback([&, runtime] {
      if (!policy_file.empty()) {
        std::ifstream in(policy_file);
        std::stringstream ss;
        ss << in.rdbuf();
        policy = parse_policy(ss.str());
      }
      ClData d = run_cl_experiment(rank, parse_int_list(n_list), samples, seed, identity, policy);
      std::ofstream f;
      std::ostream& out = open_out(out_path, f);
      if (runtime)
        write_runtime_csv(out, d);
      else
        write_csv(out, d);
    });
  };
  add_bench("cl-bench", "conjugator length against n", false);
  add_bench("rt-bench", "decide_conjugacy runtime against n", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
