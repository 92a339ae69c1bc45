#include "diffsres/cli.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "diffsres/errors.hpp"
#include "diffsres/parser.hpp"
#include "diffsres/render.hpp"

namespace diffsres {

namespace {

enum class Format { text, json, latex };

struct Config {
  std::string domain = "ratfunc(x)";
  Format format = Format::text;
  bool serial = false;
  int index = 0;
  std::string method = "subres";
  std::vector<std::string> operands;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::syntax:
      return exit_usage;
    case ErrorCategory::domain:
      return exit_domain;
    case ErrorCategory::range:
      return exit_range;
    case ErrorCategory::not_commuting:
      return exit_not_commuting;
    case ErrorCategory::internal:
      break;
  }
  return exit_internal;
}

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {
    exec_ = cfg.serial ? Execution::serial : Execution::parallel;
  }

  void sylvester() {
    auto [a, b] = operands();
    emit_matrix(diffsres::sylvester(a, b));
  }

  void subres_matrix() {
    auto [a, b] = operands();
    emit_matrix(diffsres::subres_matrix(a, b, cfg_.index));
  }

  void resultant() {
    auto [a, b] = operands();
    Element r = diffsres::resultant(a, b, exec_);
    if (cfg_.format == Format::json) {
      Json j;
      j["resultant"] = r.to_string();
      j["domain"] = r.domain()->spec();
      dump(j);
    } else {
      out_ << (cfg_.format == Format::latex ? to_latex(r) : r.to_string()) << "\n";
    }
  }

  void subresultant() {
    auto [a, b] = operands();
    SubresultantRecord rec = diffsres::subresultant(a, b, cfg_.index, exec_);
    if (cfg_.format == Format::json) {
      dump(to_json(rec));
      return;
    }
    out_ << "sres_" << rec.index << " = " << render(rec.op) << "\n";
    for (std::size_t j = 0; j < rec.minors.size(); ++j) {
      out_ << "minor D^" << j << ":\n" << render(rec.minors[j]) << "\n";
    }
  }

  void sequence() {
    auto [a, b] = operands();
    std::vector<SubresultantRecord> seq = subresultant_sequence(a, b, exec_);
    if (cfg_.format == Format::json) {
      Json arr = Json::array();
      for (const auto& r : seq) arr.push_back(to_json(r));
      dump(arr);
      return;
    }
    for (const auto& r : seq) out_ << "sres_" << r.index << " = " << render(r.op) << "\n";
  }

  void gcrd() {
    auto [a, b] = operands();
    emit_operator(cfg_.method == "euclid" ? euclid_gcrd(a, b) : gcrd_subres(a, b, exec_));
  }

  void bezout() {
    auto [a, b] = operands();
    BezoutPair bp = bezout_cofactors(a, b, exec_);
    Element r = diffsres::resultant(a, b, exec_);
    if (cfg_.format == Format::json) {
      dump(to_json(bp, r));
      return;
    }
    out_ << "P = " << render(bp.p) << "\n";
    out_ << "Q = " << render(bp.q) << "\n";
    out_ << "resultant = " << (cfg_.format == Format::latex ? to_latex(r) : r.to_string()) << "\n";
  }

  void spectral() {
    const auto& ops = cfg_.operands;
    std::pair<Odo, Odo> pair{Odo(nullptr), Odo(nullptr)};
    if (ops.size() == 3 && ops[0] == "euler") {
      pair = {euler_operator(positive(ops[1]), positive(ops[2])), euler_operator(positive(ops[2]), positive(ops[1]))};
    } else if (ops.size() == 1 && ops[0] == "lame") {
      pair = lame_pair();
    } else if (ops.size() == 2) {
      pair = operands();
    } else {
      throw UsageError("spectral expects 'euler N M', 'lame', or two operators");
    }
    CommutingPair cp = make_commuting_pair(pair.first, pair.second, exec_);
    CurveGcrd g = gcrd_on_curve(cp, exec_);
    if (cfg_.format == Format::json) {
      dump(to_json(cp, g));
      return;
    }
    const bool tex = cfg_.format == Format::latex;
    out_ << "A = " << render(cp.a) << "\n";
    out_ << "B = " << render(cp.b) << "\n";
    out_ << "h = " << (tex ? to_latex(cp.h) : cp.h.to_string()) << "\n";
    out_ << "f = " << (tex ? to_latex(cp.curve.f) : cp.curve.f.to_string()) << "\n";
    out_ << "d = " << g.index << "\n";
    out_ << "gcrd = " << render(g.gcrd) << "\n";
  }

 private:
  static unsigned positive(const std::string& s) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == 0) {
      throw UsageError("expected a positive integer, got '" + s + "'");
    }
    return v;
  }

  std::pair<Odo, Odo> operands() {
    if (cfg_.operands.size() != 2) throw UsageError("expected two operator expressions");
    DomainPtr dom = parse_domain(cfg_.domain);
    return {parse_operator(load(cfg_.operands[0]), dom), parse_operator(load(cfg_.operands[1]), dom)};
  }

  std::string render(const Odo& a) const { return cfg_.format == Format::latex ? to_latex(a) : a.to_string(); }
  std::string render(const DiffMatrix& m) const { return cfg_.format == Format::latex ? to_latex(m) : m.to_string(); }

  void emit_matrix(const DiffMatrix& m) {
    if (cfg_.format == Format::json) {
      dump(to_json(m));
    } else {
      out_ << render(m) << "\n";
    }
  }

  void emit_operator(const Odo& a) {
    if (cfg_.format == Format::json) {
      dump(to_json(a));
    } else {
      out_ << render(a) << "\n";
    }
  }

  void dump(const Json& j) { out_ << j.dump(2) << "\n"; }

  const Config& cfg_;
  std::ostream& out_;
  Execution exec_;
};

// Moves operands behind "--" so that expressions with a leading minus sign
// are not taken for options.
std::vector<std::string> separate_operands(const std::vector<std::string>& args) {
  static const std::set<std::string> with_value{"--domain", "--format", "--index", "-i", "--method"};
  std::vector<std::string> head, operands;
  bool seen_subcommand = false;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (a == "--") {
      operands.insert(operands.end(), args.begin() + static_cast<long>(k) + 1, args.end());
      break;
    }
    if (with_value.count(a) != 0) {
      head.push_back(a);
      if (k + 1 < args.size()) head.push_back(args[++k]);
    } else if (a.rfind("--", 0) == 0 || a == "-h") {
      head.push_back(a);
    } else if (!seen_subcommand) {
      head.push_back(a);
      seen_subcommand = true;
    } else {
      operands.push_back(a);
    }
  }
  if (!operands.empty()) {
    head.emplace_back("--");
    head.insert(head.end(), operands.begin(), operands.end());
  }
  return head;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Differential resultants, subresultants and gcrds of ordinary differential operators", "diffsres"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--domain", cfg.domain, "coefficient domain, e.g. 'ratfunc(x; params=lambda,mu)'");
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}}));
  app.add_flag("--serial", cfg.serial, "disable OpenMP parallel kernels");

  struct Command {
    const char* name;
    const char* help;
    void (Runner::*run)();
    bool indexed;
  };
  const std::vector<Command> commands = {
      {"sylvester", "differential Sylvester matrix", &Runner::sylvester, false},
      {"resultant", "differential resultant", &Runner::resultant, false},
      {"subres-matrix", "subresultant matrix M_i", &Runner::subres_matrix, true},
      {"subresultant", "i-th subresultant and its minors", &Runner::subresultant, true},
      {"sequence", "all subresultants", &Runner::sequence, false},
      {"gcrd", "monic greatest common right divisor", &Runner::gcrd, false},
      {"bezout", "cofactors P, Q with P*A + Q*B = resultant", &Runner::bezout, false},
      {"spectral", "spectral curve and gcrd on it (presets: 'euler N M', 'lame')", &Runner::spectral, false},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "spectral") {
      sub->add_option("operands", cfg.operands, "preset or two operators")->expected(1, 3)->required();
    } else {
      sub->add_option("operands", cfg.operands, "operators A and B (or @file)")->expected(2)->required();
    }
    if (c.indexed) sub->add_option("--index,-i", cfg.index, "subresultant index")->required();
    if (std::string(c.name) == "gcrd") {
      sub->add_option("--method", cfg.method, "subres or euclid")->check(CLI::IsMember({"subres", "euclid"}));
    }
  }

  const std::vector<std::string> normalized = separate_operands(args);
  std::vector<std::string> reversed(normalized.rbegin(), normalized.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  Runner runner(cfg, out);
  try {
    for (const auto& c : commands) {
      if (app.got_subcommand(c.name)) (runner.*c.run)();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.category());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace diffsres
