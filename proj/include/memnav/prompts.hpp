#pragma once

#include <optional>
#include <string>
#include <vector>

namespace memnav {

enum class PromptKind {
  MarkerDescription,
  MemoryRetrieval,
  MarkerSelection,
  RationaleGeneration,
  RationaleFiltering,
};

const char* prompt_kind_name(PromptKind kind);
std::optional<PromptKind> prompt_kind_from_name(const std::string& name);

// Identifies which template an incoming prompt was built from (used by the
// stub endpoint to pick a canned reply).
std::optional<PromptKind> classify_prompt(const std::string& prompt);

struct DigestLine {
  int id = 0;
  std::string description;
};

// All builders are byte-stable: identical inputs yield identical strings.
std::string build_marker_description_prompt();
std::string build_memory_retrieval_prompt(const std::string& goal_object,
                                          const std::vector<DigestLine>& entries);
std::string build_marker_selection_prompt(const std::string& goal_object,
                                          const std::vector<DigestLine>& digest);
std::string build_rationale_generation_prompt(const std::string& goal_object);
std::string build_rationale_filtering_prompt(const std::string& goal_object,
                                             const std::string& object_list,
                                             const std::string& reasonings);

}  // namespace memnav
