// Stage orchestration. Every stage reads its inputs from disk (or generates
// them), writes its artifacts under run.out_dir, and returns a one-line
// summary. `pipeline` chains synth/clean -> features -> train -> eval; the
// denoise and scalogram stages are inspection tools off the critical path.
#pragma once

#include <string>

#include "config.hpp"

namespace ws::pipeline {

// stage in {synth, clean, denoise, scalogram, features, train, eval, pipeline}
std::string run_stage(const config& cfg, const std::string& stage);

} // namespace ws::pipeline
