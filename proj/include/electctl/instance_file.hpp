// On-disk documents: control instances ("electctl/1"), witnesses, solver
// results, and the source instances of the reductions (X3C, cubic graphs).
// All are JSON.

#ifndef ELECTCTL_INSTANCE_FILE_HPP_
#define ELECTCTL_INSTANCE_FILE_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "electctl/reductions.hpp"
#include "electctl/two_stage.hpp"

namespace electctl {

inline constexpr std::string_view kInstanceFormat = "electctl/1";
inline constexpr std::string_view kWitnessFormat = "electctl-witness/1";
inline constexpr std::string_view kResultFormat = "electctl-result/1";
inline constexpr std::string_view kX3CFormat = "electctl-x3c/1";
inline constexpr std::string_view kGraphFormat = "electctl-graph/1";

// Malformed or unreadable document.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct InstanceFile {
  ControlInstance instance;
  // Free-form origin notes, e.g. which reduction produced the instance.
  std::map<std::string, std::string> provenance;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Only the fields the problem uses are written (tie for partition problems,
// k for CCPkV, limit and groups where they apply), so serialize(parse(f))
// reproduces any file this function wrote.
std::string serialize_instance(const InstanceFile& file);
InstanceFile parse_instance(std::string_view text);

// SHA-256 (hex) of the compact instance document, provenance excluded.
std::string instance_digest(const ControlInstance& instance);

std::string serialize_witness(const ControlInstance& instance, const Witness& witness);
// Accepts a witness document or a result document carrying a witness.
Witness parse_witness(const ControlInstance& instance, std::string_view text);

struct ResultRecord {
  std::string instance_digest;
  std::string solver;
  Answer answer = Answer::No;
  std::optional<Witness> witness;
  SolveStats stats;
  double wall_ms = 0;
};

std::string serialize_result_json(const ControlInstance& instance, const ResultRecord& record);
// Header line plus one row.
std::string serialize_result_csv(const ControlInstance& instance, const ResultRecord& record);

std::string serialize_x3c(const X3CInstance& x);
X3CInstance parse_x3c(std::string_view text);
std::string serialize_graph(const CubicGraphVC& g);
CubicGraphVC parse_graph(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace electctl

#endif  // ELECTCTL_INSTANCE_FILE_HPP_
