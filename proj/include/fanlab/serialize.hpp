#pragma once

#include <nlohmann/json.hpp>

#include "fanlab/admissibility.hpp"
#include "fanlab/scan.hpp"

namespace fanlab {

using nlohmann::json;

// Non-finite doubles are written as null ("NaN") or the strings "inf" and
// "-inf" so that every document parses back to the same value.
json number_to_json(double x);
double number_from_json(const json& j);

void to_json(json& j, const DataCase& c);
void from_json(const json& j, DataCase& c);

void to_json(json& j, const TwoShockSolution& s);
void from_json(const json& j, TwoShockSolution& s);

void to_json(json& j, const FanSubsolution& s);
void from_json(const json& j, FanSubsolution& s);

void to_json(json& j, const SubWedge& w);
void from_json(const json& j, SubWedge& w);
void to_json(json& j, const ActionGap& g);
void from_json(const json& j, ActionGap& g);

void to_json(json& j, const PairRecord& p);
void from_json(const json& j, PairRecord& p);
void to_json(json& j, const AdmissibilityReport& r);
void from_json(const json& j, AdmissibilityReport& r);

void to_json(json& j, const ScanRecord& r);
void from_json(const json& j, ScanRecord& r);
void to_json(json& j, const KappaCheck& k);
void from_json(const json& j, KappaCheck& k);
void to_json(json& j, const SweepRow& r);
void from_json(const json& j, SweepRow& r);
void to_json(json& j, const CounterexampleWitness& w);
void from_json(const json& j, CounterexampleWitness& w);

}  // namespace fanlab
