#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cbasis/canonical.hpp"
#include "cbasis/construct.hpp"
#include "cbasis/json_io.hpp"

namespace cbasis::cli {

namespace {

struct Failure {
  int code;
  std::string kind;
  std::string message;
  Json detail = nullptr;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Failure{malformed_input, "io", "cannot read " + path};
    buf << f.rdbuf();
  }
  return buf.str();
}

Json load_json(const std::string& path, std::istream& in) { return parse_json(read_source(path, in)); }

Quiver load_quiver(const std::string& path, std::istream& in) { return quiver_from_json(load_json(path, in)); }

ChoicePolicy make_policy(const std::string& rule) {
  ChoicePolicy p;
  if (rule == "smallest") p.rule = ChoicePolicy::Rule::smallest_id;
  else if (rule == "largest") p.rule = ChoicePolicy::Rule::largest_id;
  else throw Failure{malformed_input, "usage", "--policy must be 'smallest' or 'largest'"};
  return p;
}

Json classification_json(const Construction& c) {
  if (c.structure) return structure_to_json(*c.structure);
  return {{"type", "A"}};
}

std::string arrows_text(const Quiver& q) {
  std::ostringstream os;
  os << "n = " << q.size() << "\n";
  for (const Arrow& a : q.arrows()) os << "  " << a.tail << " -> " << a.head << "\n";
  return os.str();
}

std::string basis_text(const CompanionBasis& b, const Labelling* l) {
  std::ostringstream os;
  os << "companion basis of type " << b.type.name() << "\n";
  for (int i = 1; i <= static_cast<int>(b.size()); ++i) {
    if (l) {
      const Vertex v = l->vertex_of(i);
      os << "  beta_" << i << " (vertex " << v << ") = " << format_root(b.roots[v]) << "\n";
    } else {
      os << "  gamma_" << (i - 1) << " = " << format_root(b.roots[i - 1]) << "\n";
    }
  }
  return os.str();
}

std::string verification_text(const std::optional<VerificationFailure>& f) {
  if (!f) return "verification: ok\n";
  std::ostringstream os;
  os << "verification failed (" << f->check << ") at pair (" << f->x << ", " << f->y
     << "): expected " << f->expected << ", got " << f->got << "\n  " << f->message << "\n";
  return os.str();
}

std::string structure_text(const Json& s) {
  if (s.at("type") == "A") return "mutation type A\n";
  std::ostringstream os;
  os << "mutation type D, kind " << s.at("kind").get<std::string>();
  if (s.contains("m")) os << ", m = " << s.at("m");
  os << ", r = " << s.at("r") << "\n";
  os << "  skeleton: " << s.at("skeleton").dump() << "\n";
  for (const Json& a : s.at("attachments"))
    os << "  attachment at " << a.at("anchor") << ": " << a.at("vertices").dump() << "\n";
  return os.str();
}

Construction construct_or_fail(const Quiver& q, const ChoicePolicy& policy,
                               std::optional<EndPair> ends) {
  try {
    return construct(q, policy, ends);
  } catch (const ClassificationError& e) {
    throw Failure{classification_failure, "classification", e.what()};
  }
}

std::optional<EndPair> end_pair(int start, int finish, const Quiver& q) {
  if (start < 0 && finish < 0) return std::nullopt;
  if (start < 0 || finish < 0) throw Failure{malformed_input, "usage", "--start and --finish go together"};
  if (!q.contains(start) || !q.contains(finish))
    throw Failure{malformed_input, "usage", "end vertex out of range"};
  return EndPair{start, finish};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Companion bases for quivers of mutation type A and D", "cbasis"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string input = "-", basis_path, policy_rule = "smallest", direction, tri_path, family;
  int start = -1, finish = -1, rank = 0, walk = 0;
  std::uint64_t seed = 0;
  std::vector<int> at;
  bool oracle = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Quiver JSON file, or - for stdin");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Report the mutation type and its structure");
  add_input(classify_cmd);

  auto* label_cmd = app.add_subcommand("label", "Label the vertices");
  auto* basis_cmd = app.add_subcommand("basis", "Label, construct and verify a companion basis");
  for (auto* sub : {label_cmd, basis_cmd}) {
    add_input(sub);
    sub->add_option("--start", start, "First end vertex (type A)");
    sub->add_option("--finish", finish, "Second end vertex (type A)");
    sub->add_option("--policy", policy_rule, "End vertex choice in subquivers: smallest|largest");
  }

  auto* verify_cmd = app.add_subcommand("verify", "Check a basis against a quiver");
  add_input(verify_cmd);
  verify_cmd->add_option("--basis", basis_path, "Basis JSON file")->required();

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a quiver");
  add_input(mutate_cmd);
  mutate_cmd->add_option("--at", at, "Mutation vertex (repeat for a sequence)")->required()->allow_extra_args(false);

  auto* mutate_basis_cmd = app.add_subcommand("mutate-basis", "Mutate a quiver and its companion basis");
  add_input(mutate_basis_cmd);
  mutate_basis_cmd->add_option("--basis", basis_path, "Basis JSON file")->required();
  mutate_basis_cmd->add_option("--at", at, "Mutation vertex")->required()->expected(1);
  mutate_basis_cmd->add_option("--direction", direction, "inward|outward")
      ->required()
      ->check(CLI::IsMember({"inward", "outward"}));

  auto* gen_cmd = app.add_subcommand("gen", "Generate a quiver");
  gen_cmd->add_option("--type", family, "A|D")->check(CLI::IsMember({"A", "D"}));
  gen_cmd->add_option("--rank", rank, "Rank n");
  gen_cmd->add_option("--walk", walk, "Number of random mutations");
  gen_cmd->add_option("--seed", seed, "Seed for std::mt19937_64");
  gen_cmd->add_option("--triangulation", tri_path, "Triangulation JSON file");

  auto* dimvec_cmd = app.add_subcommand("dimvec", "Dimension vectors read off a companion basis");
  add_input(dimvec_cmd);
  dimvec_cmd->add_option("--basis", basis_path, "Basis JSON file (constructed when omitted)");
  dimvec_cmd->add_flag("--oracle", oracle, "Compare with the string enumeration");

  auto* roots_cmd = app.add_subcommand("roots", "List positive roots");
  roots_cmd->add_option("--type", family, "A|D")->required()->check(CLI::IsMember({"A", "D"}));
  roots_cmd->add_option("--rank", rank, "Rank n")->required();

  auto fail = [&](const Failure& f) {
    Json e = {{"error", f.kind}, {"message", f.message}};
    if (!f.detail.is_null()) e["detail"] = f.detail;
    err << e.dump() << "\n";
    return f.code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    return fail({malformed_input, "usage", e.what()});
  }

  const bool text = format == "text";
  auto emit = [&](const Json& j, const std::string& as_text) {
    if (text) out << as_text;
    else out << j.dump() << "\n";
  };

  try {
    if (classify_cmd->parsed()) {
      const Quiver q = load_quiver(input, in);
      Json result;
      if (validate(q, true)) throw Failure{malformed_input, "input", "quiver is not simply laced"};
      if (is_type_a(q)) {
        result = {{"type", "A"}};
      } else {
        try {
          result = structure_to_json(classify(q));
        } catch (const ClassificationError&) {
          throw Failure{classification_failure, "classification", "not mutation type A or D"};
        }
      }
      emit(result, structure_text(result));
    } else if (label_cmd->parsed() || basis_cmd->parsed()) {
      const Quiver q = load_quiver(input, in);
      const Construction c = construct_or_fail(q, make_policy(policy_rule), end_pair(start, finish, q));
      if (label_cmd->parsed()) {
        std::ostringstream os;
        for (Vertex v = 0; v < q.size(); ++v) os << "  vertex " << v << " -> label " << c.labelling.labels[v] << "\n";
        emit(labelling_to_json(c.labelling), os.str());
      } else {
        const auto report = verify(q, c.basis);
        if (report)
          throw Failure{verification_failure, "verification", "constructed basis failed verification",
                        verification_to_json(report)};
        Json j = basis_to_json(c.basis, &c.labelling);
        j["verification"] = "ok";
        j["classification"] = classification_json(c);
        emit(j, basis_text(c.basis, &c.labelling) + verification_text(report));
      }
    } else if (verify_cmd->parsed()) {
      const Quiver q = load_quiver(input, in);
      const CompanionBasis b = basis_from_json(load_json(basis_path, in));
      const auto report = verify(q, b);
      emit({{"verification", verification_to_json(report)}}, verification_text(report));
      if (report) return fail({verification_failure, "verification", report->message, verification_to_json(report)});
    } else if (mutate_cmd->parsed()) {
      Quiver q = load_quiver(input, in);
      for (int k : at) {
        if (!q.contains(k)) throw Failure{malformed_input, "usage", "mutation vertex out of range"};
        q = mutate(q, k);
      }
      emit(quiver_to_json(q), arrows_text(q));
    } else if (mutate_basis_cmd->parsed()) {
      const Quiver q = load_quiver(input, in);
      const Json bj = load_json(basis_path, in);
      const CompanionBasis b = basis_from_json(bj);
      const int k = at.front();
      if (!q.contains(k)) throw Failure{malformed_input, "usage", "mutation vertex out of range"};
      if (auto report = verify(q, b))
        throw Failure{verification_failure, "verification", "input basis is not a companion basis for the quiver",
                      verification_to_json(report)};
      const Quiver mq = mutate(q, k);
      const CompanionBasis mb = mutate_basis(q, b, k, basis_mutation_from_string(direction));
      Json j = {{"quiver", quiver_to_json(mq)}, {"basis", basis_to_json(mb)}};
      emit(j, arrows_text(mq) + basis_text(mb, nullptr));
    } else if (gen_cmd->parsed()) {
      Quiver q;
      Json j;
      if (!tri_path.empty()) {
        if (!family.empty() || rank || walk)
          throw Failure{malformed_input, "usage", "--triangulation excludes --type/--rank/--walk"};
        q = quiver_from_triangulation(triangulation_from_json(load_json(tri_path, in)));
        j = quiver_to_json(q);
      } else {
        if (family.empty() || rank < 1) throw Failure{malformed_input, "usage", "gen needs --type and --rank"};
        if (walk < 0) throw Failure{malformed_input, "usage", "--walk must be non-negative"};
        CartanType t(family_from_string(family), rank);
        const MutationWalk w = random_mutation_walk(dynkin_quiver(t), walk, seed);
        q = w.result;
        j = quiver_to_json(q);
        j["mutations"] = w.sequence;
      }
      emit(j, arrows_text(q));
    } else if (dimvec_cmd->parsed()) {
      const Quiver q = load_quiver(input, in);
      CompanionBasis b;
      if (basis_path.empty()) {
        b = construct_or_fail(q, {}, std::nullopt).basis;
      } else {
        b = basis_from_json(load_json(basis_path, in));
        if (auto report = verify(q, b))
          throw Failure{verification_failure, "verification", "basis is not a companion basis for the quiver",
                        verification_to_json(report)};
      }
      const auto vs = dimension_vectors(q, b);
      Json j = {{"family", to_string(b.type.family())}, {"count", vs.size()}, {"vectors", vectors_to_json(vs)}};
      if (b.type.family() == Family::D) j["exploratory"] = true;
      std::ostringstream os;
      for (const auto& v : vs) os << "  " << Json(v).dump() << "\n";
      if (oracle) {
        const bool agrees = vs == string_indicator_vectors(q);
        j["oracle_agrees"] = agrees;
        os << "strings oracle: " << (agrees ? "agrees" : "disagrees") << "\n";
      }
      emit(j, os.str());
    } else if (roots_cmd->parsed()) {
      CartanType t(family_from_string(family), rank);
      Json rows = Json::array();
      std::ostringstream os;
      for (const Root& r : positive_roots(t)) {
        rows.push_back(r);
        os << "  " << format_root(r) << "\n";
      }
      emit({{"type", {{"family", family}, {"rank", rank}}}, {"count", rows.size()}, {"roots", rows}}, os.str());
    }
  } catch (const Failure& f) {
    return fail(f);
  } catch (const FormatError& e) {
    return fail({malformed_input, "input", e.what()});
  } catch (const UnverifiedBasisError& e) {
    return fail({verification_failure, "verification", e.what()});
  } catch (const std::invalid_argument& e) {
    return fail({malformed_input, "input", e.what()});
  } catch (const std::out_of_range& e) {
    return fail({malformed_input, "input", e.what()});
  }
  return ok;
}

}  // namespace cbasis::cli
