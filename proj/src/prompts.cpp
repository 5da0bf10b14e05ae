#include "memnav/prompts.hpp"

namespace memnav {

namespace {

constexpr char kMarkerDescriptionTemplate[] =
    "You are an automated system with the capability to analyze the provided image.\n"
    "Based on the numerical markers present in the image, please describe the surrounding "
    "environment relative to each marker's position.\n"
    "Ensure that descriptions of different markers are distinct to maintain the uniqueness of "
    "each marker.\n"
    "The marker number should not appear in the description.\n"
    "Please adhere to the following format:\n"
    "\n"
    "Marker Number: [insert the number of the first marker here]\n"
    "Description: [provide a description corresponding to the first marker here]\n"
    "\n"
    "Marker Number: [insert the number of the second marker here]\n"
    "Description: [provide a description corresponding to the second marker here]\n"
    "\n"
    "...\n"
    "\n"
    "Marker Number: [insert the number of the last marker here]\n"
    "Description: [provide a description corresponding to the last marker here]\n";

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

}  // namespace

const char* prompt_kind_name(PromptKind kind) {
  switch (kind) {
    case PromptKind::MarkerDescription: return "marker_description";
    case PromptKind::MemoryRetrieval: return "memory_retrieval";
    case PromptKind::MarkerSelection: return "marker_selection";
    case PromptKind::RationaleGeneration: return "rationale_generation";
    case PromptKind::RationaleFiltering: return "rationale_filtering";
  }
  return "?";
}

std::optional<PromptKind> prompt_kind_from_name(const std::string& name) {
  for (PromptKind k : {PromptKind::MarkerDescription, PromptKind::MemoryRetrieval,
                       PromptKind::MarkerSelection, PromptKind::RationaleGeneration,
                       PromptKind::RationaleFiltering})
    if (name == prompt_kind_name(k)) return k;
  return std::nullopt;
}

std::optional<PromptKind> classify_prompt(const std::string& prompt) {
  if (prompt.rfind("You are an automated system", 0) == 0) return PromptKind::MarkerDescription;
  if (prompt.rfind("Based on the provided descriptions", 0) == 0) return PromptKind::MemoryRetrieval;
  if (prompt.rfind("You are a robot and after 360 degrees observation", 0) == 0)
    return PromptKind::MarkerSelection;
  if (prompt.rfind("You are given an image with a red movement trajectory", 0) == 0)
    return PromptKind::RationaleGeneration;
  if (prompt.rfind("You are given an image with a movement trajectory marked in a red line", 0) == 0)
    return PromptKind::RationaleFiltering;
  return std::nullopt;
}

std::string build_marker_description_prompt() { return kMarkerDescriptionTemplate; }

std::string build_memory_retrieval_prompt(const std::string& goal_object,
                                          const std::vector<DigestLine>& entries) {
  std::string listing;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) listing += "; ";
    listing += std::to_string(entries[i].id) + ": " + entries[i].description;
  }
  std::string out =
      "Based on the provided descriptions for each number, please select at most three number "
      "whose corresponding descriptions are most likely to help identify the {goal_object}.\n"
      "{listing}\n"
      "If the total number is less than 3, please use -1 to occupy the empty position.\n"
      "Please adhere to the following format for the output:\n"
      "\n"
      "Number List: [first number, second number, third number]\n";
  out = replace_all(out, "{goal_object}", goal_object);
  out = replace_all(out, "{listing}", listing);
  return out;
}

std::string build_marker_selection_prompt(const std::string& goal_object,
                                          const std::vector<DigestLine>& digest) {
  std::string listing;
  if (digest.empty()) {
    listing = "None";
  } else {
    for (size_t i = 0; i < digest.size(); ++i) {
      if (i) listing += "\n";
      listing += std::to_string(digest[i].id) + ": " + digest[i].description;
    }
  }
  std::string out =
      "You are a robot and after 360 degrees observation, you can see the given panorama image. "
      "The panorama image combines 4 images from different angles.\n"
      "Your task is to find the {goal_object}.\n"
      "Based on the numerical markers in the image, select one of these numbers to move next.\n"
      "If you're not confident in moving to the marker to find the {goal_object}, you can choose "
      "one of the numerical markers located outside of this image.\n"
      "The descriptions of these markers are as follows:\n"
      "{listing}\n"
      "If you're still not confident in moving to the marker to find the {goal_object}, your "
      "action should be 'None'.\n"
      "The blue circle marker on the floor indicates the previously explored position. It is "
      "better to choose a numeric marker that is not close to the blue circle marker.\n"
      "Please note all closed doors cannot be opened.\n"
      "Please follow the format like this,\n"
      "\n"
      "Thought: [put your step-by-step thinking process here]\n"
      "\n"
      "Action: [put a single marker id or None here]\n";
  out = replace_all(out, "{goal_object}", goal_object);
  out = replace_all(out, "{listing}", listing);
  return out;
}

std::string build_rationale_generation_prompt(const std::string& goal_object) {
  std::string out =
      "You are given an image with a red movement trajectory on it. Please first identify the "
      "objects near the red line in the given image. If there is no red trajectory in the image, "
      "please directly return \"None\". Second, knowning that {goal_object} could be found after "
      "following the red trajectory, you need to predict the location of {goal_object} or the "
      "region where {goal_object} could be most likely located. This can be achieved by "
      "reasonably imagining the unseen areas after the red trajectory based on the room layout.\n"
      "**Do not mention the red trajectory/line or \"the image\" in your output!**\n"
      "Please structure your output in the following way:\n"
      "OBJECTS_RED_LINE:\n"
      "LOCATION_PREDICTION_AND_REASONING:\n";
  return replace_all(out, "{goal_object}", goal_object);
}

std::string build_rationale_filtering_prompt(const std::string& goal_object,
                                             const std::string& object_list,
                                             const std::string& reasonings) {
  std::string out =
      "You are given an image with a movement trajectory marked in a red line. Please first "
      "verify if all of the objects in a given list are present near the red line in the given "
      "image. If there is no red line in the image or any of the objects not present, please "
      "ignore the rest and directly return \"NONE\".\n"
      "Second, verify if the reasonings of why {goal_object} may be put close to the objects in "
      "the list. A good reasoning should be logical and perfectly reflect common sense "
      "knowledge. A good reasoning gives convincing reasons while a bad reasoning gives vague or "
      "untruthful reasons. If the reasonings are good, output \"GOOD REASONINGS\", otherwise, "
      "output \"BAD REASONINGS\".\n"
      "Example of a good reasoning: \"The book is most likely located on the shelves in the "
      "background. The shelves are a common place for storing books, and they are visible in the "
      "room at the end of the path.\".\n"
      "Example of a bad reasoning: \"The mirror is most likely located on the dark wall to the "
      "right of the doorway. This is inferred from the visible portion of the mirror reflecting "
      "the room, indicating its position on the dark wall.\".\n"
      "Please structure your output in the following way:\n"
      "OBJECTS_PRESENCE_CHECK:\n"
      "REASONING_CHECK:\n"
      "Object list: {object_list}\n"
      "Reasonings: {reasonings}\n";
  out = replace_all(out, "{goal_object}", goal_object);
  out = replace_all(out, "{object_list}", object_list);
  out = replace_all(out, "{reasonings}", reasonings);
  return out;
}

}  // namespace memnav
