#pragma once

#include "ramanqed/config.hpp"

namespace ramanqed {

// Executes one configured task end to end, writing the primary output and
// its "<path>.meta.json" sidecar atomically. Exposed per task so tests can
// drive the exact code path the CLI uses.
void run_eigen(const RunConfig& cfg);
void run_spectrum(const RunConfig& cfg);
void run_map(const RunConfig& cfg);
void run_raman(const RunConfig& cfg);
void run_classify(const RunConfig& cfg);
int run_verify(const RunConfig& cfg);

// Dispatch on cfg.task; returns the process exit code (0 ok, 1 config
// error, 2 numerical failure).
int run_task(const RunConfig& cfg);

}  // namespace ramanqed
