#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "incidence/error.h"
#include "incidence/torus.h"

namespace incidence {

enum class MoveKind { Urban, Remove2, Add2 };

struct MoveStep {
  MoveKind op = MoveKind::Urban;
  std::string target;
  // Coordinates of the new label for add2; its kind follows the target's color.
  std::optional<Vec> label;
  // add2: {start, length} of the arc, counted along the rotation at the target
  // beginning with its first stored incident edge.
  std::optional<std::array<int, 2>> partition;
};

using MoveScript = std::vector<MoveStep>;

struct MoveRecord {
  std::vector<std::string> created;
  std::string kept, merged;  // remove2: surviving neighbour, absorbed neighbour
};

struct MoveOutcome {
  Config config;
  MoveRecord record;
};

MoveOutcome remove_degree2(const Config& c, const std::string& v);
MoveOutcome add_degree2(const Config& c, const std::string& v, int start, int len, const HElem& label);
// Spoke gauge with a1..a4 the old h of A-c, B-c, B-d, A-d:
// A-g: 0, E-c: a1, B-h: a2 - a1, F-d: a4, inner square: 0.
MoveOutcome urban_renewal(const Config& c, const std::string& face_id);

class ScriptError : public Error {
 public:
  ScriptError(int step, Errc code, const std::string& what)
      : Error(code, "step " + std::to_string(step) + ": " + what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

struct TraceEntry {
  int step = 0;
  std::string op, target;
  bool v_ok = true, f_ok = true;
  int failing_faces = 0;
  std::string note;
  MoveRecord record;
};

struct ScriptResult {
  Config config;
  std::vector<TraceEntry> trace;
};

// Applies steps left to right; throws ScriptError at the first failure.
// With `validate`, every intermediate config is run through check_V/check_F.
ScriptResult apply_script(const Config& c, const MoveScript& s, bool validate = false);
MoveOutcome apply_step(const Config& c, const MoveStep& step);

const char* move_name(MoveKind k);
MoveScript script_from_json(const std::string& text);
std::string script_to_json(const MoveScript& s);

// First id of the form prefix<N> not used in the graph.
std::string fresh_id(const TorusGraph& g, const std::string& prefix = "v");

}  // namespace incidence
