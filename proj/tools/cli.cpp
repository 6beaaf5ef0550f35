#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "houghton/conjugacy.hpp"
#include "houghton/oracle.hpp"
#include "houghton/orbits.hpp"
#include "houghton/serialize.hpp"
#include "houghton/word.hpp"

namespace houghton::cli {

namespace {

class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 0;
  bool words = false;
  bool pretty = false;
};

void add_common(CLI::App *cmd, Common &c, bool with_words = true) {
  cmd->add_option("-n,--rays", c.n, "Number of rays (checked against element documents)");
  if (with_words)
    cmd->add_flag("-w,--words", c.words, "Treat operands as words instead of element files");
  cmd->add_flag("--pretty", c.pretty, "Human-readable output");
}

HoughtonElement load(const std::string &operand, const Common &c) {
  if (c.words) {
    if (c.n == 0)
      throw DataError("-n is required when operands are words");
    return evaluate(Word::parse(c.n, operand));
  }
  std::ifstream in(operand);
  if (!in)
    throw DataError("cannot read element file '" + operand + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  HoughtonElement g = deserialize(buf.str());
  if (c.n != 0 && g.rays() != c.n)
    throw DataError("element file '" + operand + "' has n = " + std::to_string(g.rays()) +
                    " but -n " + std::to_string(c.n) + " was given");
  return g;
}

std::vector<HoughtonElement> load_all(const std::vector<std::string> &operands, const Common &c) {
  std::vector<HoughtonElement> out;
  for (const auto &op : operands) {
    out.push_back(load(op, c));
    if (out.front().rays() != out.back().rays())
      throw DataError("operands act on different numbers of rays");
  }
  return out;
}

std::string pretty(const HoughtonElement &g) {
  std::ostringstream os;
  os << "n = " << g.rays() << "\nt = (";
  for (std::size_t k = 0; k < g.translation().size(); ++k)
    os << (k ? ", " : "") << g.translation()[k];
  os << ")\n";
  for (const auto &[p, q] : g.exceptions())
    os << p << " -> " << q << '\n';
  return os.str();
}

std::string render(const HoughtonElement &g, const Common &c) {
  return c.pretty ? pretty(g) : serialize(g);
}

std::string pretty(const ConjugacyOutcome &o) {
  std::ostringstream os;
  os << "conjugate: " << (o.is_conjugate() ? "yes" : "no") << '\n';
  if (o.is_conjugate())
    os << "certificate:\n" << pretty(o.conjugator());
  else
    os << "reason: " << to_string(o.reason()) << '\n';
  if (const auto &b = o.bounds())
    os << "bounds: K = " << b->K << ", M = " << b->M << ", N = " << b->N << '\n';
  return os.str();
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Arithmetic, orbits and conjugacy in Houghton's groups H_n", "houghton"};
  app.require_subcommand(1);

  Common c;
  std::string word;
  std::vector<std::string> operands;
  std::string single;
  int ray = 0;
  Offset offset = 0;
  unsigned jobs = 1;
  std::size_t budget = 8;

  auto *eval = app.add_subcommand("eval", "Evaluate a word to its element document");
  add_common(eval, c, false);
  eval->add_option("word", word, "Whitespace-separated tokens g2..gn, inverse suffix ', s for n = 2");

  auto *mul = app.add_subcommand("mul", "Product A*B (right action: apply A first)");
  add_common(mul, c);
  mul->add_option("operands", operands)->required()->expected(2);

  auto *inv = app.add_subcommand("inv", "Inverse of A");
  add_common(inv, c);
  inv->add_option("operands", operands)->required()->expected(1);

  auto *apply_cmd = app.add_subcommand("apply", "Image of the point (ray, offset) under A");
  add_common(apply_cmd, c);
  apply_cmd->add_option("element", single)->required();
  apply_cmd->add_option("ray", ray)->required();
  apply_cmd->add_option("offset", offset)->required();

  auto *orbits = app.add_subcommand("orbits", "Cycle decomposition of A");
  add_common(orbits, c);
  orbits->add_option("operands", operands)->required()->expected(1);

  auto *ends = app.add_subcommand("ends", "Classes of rays joined by infinite orbits of A");
  add_common(ends, c);
  ends->add_option("operands", operands)->required()->expected(1);

  auto *conj = app.add_subcommand("conj", "Decide whether x^-1 A x = B for some x");
  add_common(conj, c);
  conj->add_option("operands", operands)->required()->expected(2);
  conj->add_option("--jobs", jobs, "Worker threads for the bounded search")
      ->check(CLI::Range(1u, 256u));

  auto *verify_cmd = app.add_subcommand("verify", "Check that x^-1 A x = B");
  add_common(verify_cmd, c);
  verify_cmd->add_option("operands", operands, "A B X")->required()->expected(3);

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force word search for a conjugator");
  add_common(oracle_cmd, c);
  oracle_cmd->add_option("operands", operands)->required()->expected(2);
  oracle_cmd->add_option("--budget", budget, "Maximum word length");

  std::vector<const char *> argv{"houghton"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (eval->parsed()) {
      if (c.n == 0)
        throw DataError("eval needs -n");
      out << render(evaluate(Word::parse(c.n, word)), c);
    } else if (mul->parsed()) {
      auto g = load_all(operands, c);
      out << render(compose(g[0], g[1]), c);
    } else if (inv->parsed()) {
      out << render(inverse(load(operands[0], c)), c);
    } else if (apply_cmd->parsed()) {
      const auto g = load(single, c);
      if (!g.is_valid_point({ray, offset}))
        throw DataError("(" + std::to_string(ray) + "," + std::to_string(offset) +
                        ") is not a point of X_" + std::to_string(g.rays()));
      out << g.apply({ray, offset}) << '\n';
    } else if (orbits->parsed()) {
      out << format_decomposition(cycle_decomposition(load(operands[0], c)));
    } else if (ends->parsed()) {
      const auto e = ends_partition(load(operands[0], c));
      if (c.pretty) {
        for (const auto &cls : e.classes) {
          out << '{';
          for (std::size_t k = 0; k < cls.size(); ++k)
            out << (k ? "," : "") << cls[k];
          out << "}\n";
        }
      } else {
        out << nlohmann::json(e.classes).dump() << '\n';
      }
    } else if (conj->parsed()) {
      auto g = load_all(operands, c);
      const auto outcome = conjugate(g[0], g[1], {jobs});
      out << (c.pretty ? pretty(outcome) : serialize(outcome));
    } else if (verify_cmd->parsed()) {
      auto g = load_all(operands, c);
      const bool ok = verify(g[0], g[1], g[2]);
      if (c.pretty)
        out << "verified: " << (ok ? "yes" : "no") << '\n';
      else
        out << nlohmann::ordered_json{{"decision", ok ? "yes" : "no"}}.dump() << '\n';
    } else if (oracle_cmd->parsed()) {
      auto g = load_all(operands, c);
      const auto w = oracle::brute_force_conjugator(g[0], g[1], {budget, 10'000'000});
      nlohmann::ordered_json doc;
      doc["found"] = w.has_value();
      if (w)
        doc["word"] = w->str();
      doc["budget"] = budget;
      out << doc.dump() << '\n';
    }
  } catch (const DataError &e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const InvalidElement &e) {
    err << "invalid element: " << e.what() << '\n';
    return kDataError;
  } catch (const InvalidWord &e) {
    err << "invalid word: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

} // namespace houghton::cli
