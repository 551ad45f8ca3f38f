#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

struct ParamRange {
    std::string name;
    long long lo = 0;
    long long hi = 0;
    long long step = 1;
};

struct SweepSpec {
    std::string lemma_id;
    std::vector<ParamRange> ranges;  // empty: registry defaults
    bool full = false;               // extended box where the registry offers one
    int threads = 1;
};

struct SweepPoint {
    std::vector<long long> point;
    double value = 0.0;
};

struct SweepReport {
    std::string lemma_id;
    std::uint64_t evaluations = 0;
    std::uint64_t escalated = 0;  // points re-certified in extended precision
    double min_value = 0.0;
    std::vector<long long> argmin;
    std::string status;  // verified | counterexample | inconclusive
    double elapsed_s = 0.0;
    std::vector<SweepPoint> counterexamples;  // capped
    std::vector<std::string> notes;
    std::vector<ParamRange> ranges;  // the box actually swept
};

struct LemmaInfo {
    std::string id;
    std::string summary;
    std::vector<ParamRange> default_box;
    bool has_full_box = false;
};

std::vector<LemmaInfo> lemma_registry();
bool lemma_known(const std::string& id);

// Evaluates the lemma expression at every integer point of the box;
// near-zero points are re-certified at >= 50 significant digits
// (ABC_PRECISION_ESCALATION=0 disables).  Deterministic for any thread count.
SweepReport sweep(const SweepSpec& spec);

// Direct expression access (double path), mainly for spot checks.
double lemma_value(const std::string& id, const std::vector<long long>& point);

// Structural checklist of a single tree against the proved tree properties.
struct ChecklistItem {
    std::string id;
    bool applicable = true;
    bool pass = false;
    std::string witness;  // failure description, empty when passing
};

struct StructureChecklist {
    std::vector<ChecklistItem> items;
    bool all_applicable_pass() const;
    const ChecklistItem* find(const std::string& id) const;
};

StructureChecklist validate_structure(const Tree& t);

}  // namespace abc
