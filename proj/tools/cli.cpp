#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zrq/check.hpp"
#include "zrq/error.hpp"
#include "zrq/json_io.hpp"
#include "zrq/lattice.hpp"

namespace zrq::cli {
namespace {

using json::Json;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return 1;
    case ErrorKind::Isolated:
    case ErrorKind::WitnessNotFound:
    case ErrorKind::TypeMismatch: return 3;
    default: return 2;
  }
}

struct Session {
  explicit Session(std::istream& input) : in(input) {}

  std::istream& in;
  std::string field_flag;
  std::uint64_t seed = 1;
  std::string out_path;
  bool stdin_used = false;
  FieldPtr field;

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used) fail(ErrorKind::Parse, "stdin can only be read once");
      stdin_used = true;
      return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream f(path);
    if (!f) fail(ErrorKind::Parse, "cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  Json load(const std::string& path) { return json::parse(read(path)); }

  // --field wins; otherwise the first document naming a field; otherwise Q.
  void settle_field(const std::vector<const Json*>& docs) {
    if (!field_flag.empty()) {
      const std::string& f = field_flag;
      if (f == "Q" || f == "sqrt2") field = json::decode_field(Json(f));
      else if (!f.empty() && f.front() == '{') field = json::decode_field(json::parse(f));
      else field = json::decode_field(load(f));
      return;
    }
    for (const Json* d : docs)
      if (FieldPtr f = json::field_of(*d)) {
        field = f;
        return;
      }
    field = NumberField::rationals();
  }

  Preorder preorder(const Json& j) const { return json::decode_preorder(j, field); }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-invariant preorders on Q^n: canonical forms, lattice, topology, action, valuations.", "zrq"};
  app.require_subcommand(1);
  Session s(in);
  app.add_option("--field", s.field_flag, "Number field: Q, sqrt2, inline JSON or a JSON file");
  app.add_option("--seed", s.seed, "Seed for randomized commands");
  app.add_option("--out", s.out_path, "Write the result here instead of stdout");

  std::string result;
  std::string a, b, c;
  std::int64_t m = 0, m_max = 0, level = 0;
  std::size_t count = 1, cases = 100, max_rank = 0;
  bool same_type = false;
  bool max_rank_set = false;

  auto* canon = app.add_subcommand("canon", "Canonical form of a preorder");
  canon->add_option("preorder", a, "Preorder JSON file or -")->required();
  canon->callback([&] {
    Json p = s.load(a);
    s.settle_field({&p});
    result = dump(json::encode(s.preorder(p)));
  });

  auto* compare = app.add_subcommand("compare", "Compare u and v: <, ~ or >");
  compare->add_option("preorder", a, "Preorder JSON file or -")->required();
  compare->add_option("u", b, "Integer vector as JSON")->required();
  compare->add_option("v", c, "Integer vector as JSON")->required();
  compare->callback([&] {
    Json p = s.load(a);
    s.settle_field({&p});
    const Preorder pre = s.preorder(p);
    const SignClass r = pre.compare(json::decode_int_vector(json::parse(b)), json::decode_int_vector(json::parse(c)));
    result = std::string(r == SignClass::Neg ? "<" : r == SignClass::Zero ? "~" : ">") + "\n";
  });

  auto* meet_cmd = app.add_subcommand("meet", "Meet of two preorders");
  meet_cmd->add_option("p", a, "Preorder JSON file or -")->required();
  meet_cmd->add_option("q", b, "Preorder JSON file or -")->required();
  meet_cmd->callback([&] {
    Json p = s.load(a), q = s.load(b);
    s.settle_field({&p, &q});
    result = dump(json::encode(meet(s.preorder(p), s.preorder(q))));
  });

  auto* refines_cmd = app.add_subcommand("refines", "Whether q refines p");
  refines_cmd->add_option("p", a, "Coarse preorder")->required();
  refines_cmd->add_option("q", b, "Fine preorder")->required();
  refines_cmd->callback([&] {
    Json p = s.load(a), q = s.load(b);
    s.settle_field({&p, &q});
    result = refines(s.preorder(p), s.preorder(q)) ? "true\n" : "false\n";
  });

  auto* distance_cmd = app.add_subcommand("distance", "Ultrametric distance");
  distance_cmd->add_option("p", a, "Preorder JSON file or -")->required();
  distance_cmd->add_option("q", b, "Preorder JSON file or -")->required();
  distance_cmd->add_option("m_max", m_max, "Largest box radius examined")->required()->check(CLI::PositiveNumber);
  distance_cmd->callback([&] {
    Json p = s.load(a), q = s.load(b);
    s.settle_field({&p, &q});
    result = distance(s.preorder(p), s.preorder(q), m_max).to_string() + "\n";
  });

  auto* witness = app.add_subcommand("witness", "A different preorder agreeing on G_m");
  witness->add_option("preorder", a, "Preorder JSON file or -")->required();
  witness->add_option("m", m, "Box radius")->required()->check(CLI::PositiveNumber);
  witness->add_flag("--same-type", same_type, "Keep rank, degree and type");
  witness->add_option("--count", count, "Number of distinct same-type neighbours")->check(CLI::PositiveNumber);
  witness->callback([&] {
    Json p = s.load(a);
    s.settle_field({&p});
    const Preorder pre = s.preorder(p);
    if (count > 1) {
      Json arr = Json::array();
      for (const auto& q : same_type_neighbors(pre, m, count)) arr.push_back(json::encode(q));
      result = dump(arr);
    } else {
      result = dump(json::encode(perturb_in_ball(pre, m, same_type)));
    }
  });

  auto* fragment = app.add_subcommand("fragment", "DOT graph of a finite fragment of the tree");
  fragment->add_option("candidates", a, "{\"n\": n, \"candidates\": [rows...]} file or -")->required();
  fragment->add_option("--max-rank", max_rank, "Longest row tuple (default n)")->each([&](const std::string&) {
    max_rank_set = true;
  });
  fragment->callback([&] {
    Json j = s.load(a);
    s.settle_field({&j});
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_unsigned())
      fail(ErrorKind::Parse, "candidates file needs \"n\"");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<FieldVector> cands;
    if (j.contains("candidates"))
      for (const auto& r : j.at("candidates")) cands.push_back(json::decode_vector(s.field, r));
    result = to_dot(enumerate_fragment(s.field, cands, n, max_rank_set ? max_rank : n));
  });

  auto* act = app.add_subcommand("act", "Apply an automorphism to a preorder");
  act->add_option("phi", a, "Automorphism JSON file or -")->required();
  act->add_option("preorder", b, "Preorder JSON file or -")->required();
  act->callback([&] {
    Json phi = s.load(a), p = s.load(b);
    s.settle_field({&p});
    result = dump(json::encode(apply(json::decode_automorphism(phi), s.preorder(p))));
  });

  auto* valuate_cmd = app.add_subcommand("valuate", "Monomial valuation of a Laurent polynomial");
  valuate_cmd->add_option("preorder", a, "Preorder JSON file or -")->required();
  valuate_cmd->add_option("polynomial", b, "Laurent polynomial JSON file or -")->required();
  valuate_cmd->callback([&] {
    Json p = s.load(a), f = s.load(b);
    s.settle_field({&p});
    result = dump(json::encode(valuate(s.preorder(p), json::decode_polynomial(f))));
  });

  auto* fp = app.add_subcommand("fingerprint", "Signs on the box {-k..k}^n");
  fp->add_option("preorder", a, "Preorder JSON file or -")->required();
  fp->add_option("level", level, "Box radius")->required()->check(CLI::NonNegativeNumber);
  fp->callback([&] {
    Json p = s.load(a);
    s.settle_field({&p});
    result = dump(json::encode(fingerprint(s.preorder(p), level)));
  });

  int check_status = 0;
  auto* check_cmd = app.add_subcommand("check", "Run property suites");
  check_cmd->add_option("suite", a, "axioms, lattice, metric, action, valuation or all")->required();
  check_cmd->add_option("--cases", cases, "Cases per property")->check(CLI::PositiveNumber);
  check_cmd->callback([&] {
    if (!check::is_suite(a)) fail(ErrorKind::Parse, "unknown suite: " + a);
    const auto reports = check::run(a, s.seed, cases);
    const Json report = check::to_json(reports, s.seed, cases);
    result = dump(report);
    if (!report.at("passed").get<bool>()) check_status = 2;
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (s.out_path.empty()) {
    out << result;
  } else {
    std::ofstream f(s.out_path, std::ios::binary);
    if (!(f << result)) {
      err << "error: cannot write " << s.out_path << "\n";
      return 1;
    }
  }
  return check_status;
}

}  // namespace zrq::cli
