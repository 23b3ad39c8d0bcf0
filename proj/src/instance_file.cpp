#include "electctl/instance_file.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace electctl {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    fail(std::string("field '") + key + "' has the wrong type");
  }
}

void expect_format(const json& doc, std::string_view format) {
  auto got = field<std::string>(doc, "format");
  if (got != format) fail("expected format '" + std::string(format) + "', got '" + got + "'");
}

json ballot_to_json(const CandidateSet& cs, const Ballot& b) {
  json out = json::object();
  if (b.kind() == BallotKind::LinearOrder) {
    json rank = json::array();
    for (auto c : b.order()) rank.push_back(cs[c].id);
    out["rank"] = std::move(rank);
  } else {
    std::string bits(cs.size(), '0');
    for (std::size_t c = 0; c < cs.size(); ++c) {
      if (b.approves(c)) bits[c] = '1';
    }
    out["approve"] = std::move(bits);
  }
  return out;
}

Ballot ballot_from_json(const CandidateSet& cs, BallotKind kind, const json& doc) {
  if (kind == BallotKind::LinearOrder) {
    std::vector<CandidateIndex> order;
    for (const auto& id : field<std::vector<std::string>>(doc, "rank")) order.push_back(cs.index_of(id));
    return Ballot::ranking(std::move(order));
  }
  return Ballot::approval(field<std::string>(doc, "approve"));
}

json ballots_to_json(const Profile& profile, const std::vector<std::string>& groups) {
  json out = json::array();
  for (std::size_t i = 0; i < profile.size(); ++i) {
    json b = ballot_to_json(profile.candidates(), profile[i]);
    if (!groups.empty()) b["group"] = groups[i];
    out.push_back(std::move(b));
  }
  return out;
}

Profile ballots_from_json(const CandidateSet& cs, BallotKind kind, const json& list,
                          std::vector<std::string>& groups) {
  if (!list.is_array()) fail("ballots must be an array");
  Profile profile(cs, kind);
  for (const auto& b : list) {
    profile.add(ballot_from_json(cs, kind, b));
    if (b.contains("group")) groups.push_back(field<std::string>(b, "group"));
  }
  if (!groups.empty() && groups.size() != profile.size()) {
    fail("either every ballot carries a group label or none does");
  }
  return profile;
}

json instance_to_json(const ControlInstance& inst) {
  const Profile& profile = inst.profile;
  const CandidateSet& cs = profile.candidates();
  json doc = json::object();
  doc["format"] = kInstanceFormat;
  doc["problem"] = to_string(inst.problem);
  doc["rule"] = to_string(inst.rule);
  if (uses_tie_rule(inst.problem)) doc["tie"] = to_string(inst.tie);
  if (inst.problem == Problem::CCPkV) doc["k"] = inst.k;
  if (is_group_selection_problem(inst.problem)) doc["limit"] = inst.limit;
  json cands = json::array();
  for (const Candidate& c : cs) {
    json entry = {{"id", c.id}};
    if (c.special_index) entry["special"] = *c.special_index;
    cands.push_back(std::move(entry));
  }
  doc["candidates"] = std::move(cands);
  doc["distinguished"] = cs[inst.distinguished].id;
  const bool avg = inst.problem == Problem::CCAVG;
  doc["ballots"] = ballots_to_json(profile, avg ? std::vector<std::string>{} : inst.groups);
  if (inst.pool) doc["pool"] = ballots_to_json(*inst.pool, avg ? inst.groups : std::vector<std::string>{});
  return doc;
}

std::string to_hex(const unsigned char* data, std::size_t size) {
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (std::size_t i = 0; i < size; ++i) out << std::setw(2) << static_cast<int>(data[i]);
  return out.str();
}

json witness_to_json(const ControlInstance& inst, const Witness& witness) {
  const CandidateSet& cs = inst.profile.candidates();
  return std::visit(
      [&](const auto& w) -> json {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, VoterPartition>) {
          return {{"type", "voter_partition"}, {"parts", w.parts}};
        } else if constexpr (std::is_same_v<T, CandidatePartition>) {
          return {{"type", "candidate_partition"},
                  {"first", cs.ids_of(w.first)},
                  {"second", cs.ids_of(w.second)}};
        } else {
          return {{"type", "group_selection"}, {"groups", w.groups}};
        }
      },
      witness);
}

Witness witness_from_json(const ControlInstance& inst, const json& doc) {
  const auto type = field<std::string>(doc, "type");
  if (type == "voter_partition") {
    return VoterPartition{field<std::vector<std::vector<std::size_t>>>(doc, "parts")};
  }
  if (type == "candidate_partition") {
    const CandidateSet& cs = inst.profile.candidates();
    return CandidatePartition{cs.mask_of(field<std::vector<std::string>>(doc, "first")),
                              cs.mask_of(field<std::vector<std::string>>(doc, "second"))};
  }
  if (type == "group_selection") {
    return GroupSelection{field<std::vector<std::string>>(doc, "groups")};
  }
  fail("unknown witness type '" + type + "'");
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string serialize_instance(const InstanceFile& file) {
  json doc = instance_to_json(file.instance);
  if (!file.provenance.empty()) doc["provenance"] = file.provenance;
  return doc.dump(2) + "\n";
}

InstanceFile parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  expect_format(doc, kInstanceFormat);
  InstanceFile out;
  ControlInstance& inst = out.instance;

  const auto problem_name = field<std::string>(doc, "problem");
  const auto problem = parse_problem(problem_name);
  if (!problem) fail("unknown problem '" + problem_name + "'");
  inst.problem = *problem;
  const auto rule_name = field<std::string>(doc, "rule");
  const auto rule = parse_voting_rule(rule_name);
  if (!rule) fail("unknown voting rule '" + rule_name + "'");
  inst.rule = *rule;
  if (uses_tie_rule(inst.problem)) {
    const auto tie_name = field<std::string>(doc, "tie");
    const auto tie = parse_tie_rule(tie_name);
    if (!tie) fail("unknown tie rule '" + tie_name + "'");
    inst.tie = *tie;
  }
  if (inst.problem == Problem::CCPkV) inst.k = field<int>(doc, "k");
  if (is_group_selection_problem(inst.problem)) inst.limit = field<std::size_t>(doc, "limit");

  std::vector<Candidate> candidates;
  const json& cands = doc.contains("candidates") ? doc.at("candidates") : json();
  if (!cands.is_array()) fail("candidates must be an array");
  for (const auto& c : cands) {
    Candidate cand{field<std::string>(c, "id"), std::nullopt};
    if (c.contains("special")) cand.special_index = field<int>(c, "special");
    candidates.push_back(std::move(cand));
  }
  CandidateSet cs(std::move(candidates));
  inst.distinguished = cs.index_of(field<std::string>(doc, "distinguished"));

  const BallotKind kind = required_ballot_kind(inst.rule);
  std::vector<std::string> ballot_groups;
  if (!doc.contains("ballots")) fail("missing field 'ballots'");
  inst.profile = ballots_from_json(cs, kind, doc.at("ballots"), ballot_groups);
  if (doc.contains("pool")) {
    std::vector<std::string> pool_groups;
    inst.pool = ballots_from_json(cs, kind, doc.at("pool"), pool_groups);
    if (inst.problem == Problem::CCAVG) inst.groups = std::move(pool_groups);
  }
  if (inst.problem != Problem::CCAVG) inst.groups = std::move(ballot_groups);
  if (doc.contains("provenance")) {
    out.provenance = field<std::map<std::string, std::string>>(doc, "provenance");
  }
  validate(inst);
  return out;
}

std::string instance_digest(const ControlInstance& instance) {
  const std::string compact = instance_to_json(instance).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(compact.data(), compact.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  return to_hex(md.data(), len);
}

std::string serialize_witness(const ControlInstance& instance, const Witness& witness) {
  json doc = witness_to_json(instance, witness);
  doc["format"] = kWitnessFormat;
  return doc.dump(2) + "\n";
}

Witness parse_witness(const ControlInstance& instance, std::string_view text) {
  const json doc = parse_json(text);
  const auto format = field<std::string>(doc, "format");
  if (format == kResultFormat) {
    if (!doc.contains("witness") || doc.at("witness").is_null()) fail("result carries no witness");
    return witness_from_json(instance, doc.at("witness"));
  }
  expect_format(doc, kWitnessFormat);
  return witness_from_json(instance, doc);
}

std::string serialize_result_json(const ControlInstance& instance, const ResultRecord& record) {
  json doc = {
      {"format", kResultFormat},
      {"instance_digest", record.instance_digest},
      {"problem", to_string(instance.problem)},
      {"rule", to_string(instance.rule)},
      {"solver", record.solver},
      {"answer", to_string(record.answer)},
      {"witness", record.witness ? witness_to_json(instance, *record.witness) : json()},
      {"stats",
       {{"cases_examined", record.stats.cases_examined},
        {"partitions_enumerated", record.stats.partitions_enumerated}}},
      {"wall_ms", record.wall_ms},
  };
  if (uses_tie_rule(instance.problem)) doc["tie"] = to_string(instance.tie);
  return doc.dump(2) + "\n";
}

std::string serialize_result_csv(const ControlInstance& instance, const ResultRecord& record) {
  std::ostringstream out;
  out << "instance_digest,problem,rule,tie,solver,answer,cases_examined,partitions_enumerated,"
         "wall_ms,witness\n";
  out << record.instance_digest << ',' << to_string(instance.problem) << ','
      << to_string(instance.rule) << ','
      << (uses_tie_rule(instance.problem) ? to_string(instance.tie) : "") << ',' << record.solver
      << ',' << to_string(record.answer) << ',' << record.stats.cases_examined << ','
      << record.stats.partitions_enumerated << ',' << record.wall_ms << ','
      << (record.witness ? csv_quote(witness_to_json(instance, *record.witness).dump()) : "")
      << '\n';
  return out.str();
}

std::string serialize_x3c(const X3CInstance& x) {
  json doc = {{"format", kX3CFormat}, {"m", x.m}, {"sets", x.sets}};
  return doc.dump(2) + "\n";
}

X3CInstance parse_x3c(std::string_view text) {
  const json doc = parse_json(text);
  expect_format(doc, kX3CFormat);
  X3CInstance x{field<std::size_t>(doc, "m"), {}};
  for (const auto& s : field<std::vector<std::vector<std::size_t>>>(doc, "sets")) {
    if (s.size() != 3) fail("every X3C set needs exactly three elements");
    x.sets.push_back({s[0], s[1], s[2]});
  }
  validate(x);
  return x;
}

std::string serialize_graph(const CubicGraphVC& g) {
  json doc = {{"format", kGraphFormat}, {"vertices", g.graph.vertices}, {"edges", g.graph.edges}, {"k", g.k}};
  return doc.dump(2) + "\n";
}

CubicGraphVC parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  expect_format(doc, kGraphFormat);
  CubicGraphVC g;
  g.graph.vertices = field<std::size_t>(doc, "vertices");
  for (const auto& e : field<std::vector<std::vector<std::size_t>>>(doc, "edges")) {
    if (e.size() != 2) fail("every edge needs exactly two endpoints");
    g.graph.edges.emplace_back(e[0], e[1]);
  }
  g.k = field<std::size_t>(doc, "k");
  validate(g);
  return g;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace electctl
