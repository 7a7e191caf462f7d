#include "shelfmix/records.hpp"

#include <cstdio>

namespace shelfmix {

namespace {

std::string opt_str(const std::optional<std::string>& v) { return v ? *v : std::string(); }

json opt_json(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string double_decimal(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string short_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

TvRecord make_tv_record(const TVReport& report, bool with_exact, bool with_asymptotic) {
  TvRecord rec;
  rec.n = report.n;
  rec.m = report.m.get_str();
  if (with_exact) {
    rec.tv_exact = report.tv_decimal;
    rec.argmax_k = report.argmax_k;
    if (report.deltas) {
      rec.delta_minus = rat_to_decimal(report.deltas->delta_minus, kDeltaDecimalPlaces);
      rec.delta_plus = rat_to_decimal(report.deltas->delta_plus, kDeltaDecimalPlaces);
    }
  }
  if (with_asymptotic)
    rec.tv_asymptotic = double_decimal(report.tv_asym, kTvDecimalPlaces);
  return rec;
}

std::string to_csv_row(const TvRecord& rec) {
  std::string row = rec.m;
  row += ',' + opt_str(rec.tv_exact);
  row += ',' + opt_str(rec.tv_asymptotic);
  row += ',' + (rec.argmax_k ? std::to_string(*rec.argmax_k) : std::string());
  row += ',' + opt_str(rec.delta_minus);
  row += ',' + opt_str(rec.delta_plus);
  return row;
}

json to_json(const TvRecord& rec) {
  json j;
  j["kind"] = "tv";
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["tv_exact"] = opt_json(rec.tv_exact);
  j["tv_asymptotic"] = opt_json(rec.tv_asymptotic);
  j["argmax_k"] = rec.argmax_k ? json(*rec.argmax_k) : json(nullptr);
  j["delta_minus"] = opt_json(rec.delta_minus);
  j["delta_plus"] = opt_json(rec.delta_plus);
  j["tv_places"] = kTvDecimalPlaces;
  j["delta_places"] = kDeltaDecimalPlaces;
  return j;
}

std::string to_csv_row(const ProfileRecord& rec) {
  return short_double(rec.theta) + "," + rec.tv_asymptotic;
}

json to_json(const ProfileRecord& rec) {
  json j;
  j["kind"] = "profile";
  j["n"] = rec.n;
  j["theta"] = rec.theta;
  j["tv_asymptotic"] = rec.tv_asymptotic;
  j["tv_places"] = kTvDecimalPlaces;
  return j;
}

std::string to_csv_row(const MixingRecord& rec) {
  std::string row = std::to_string(rec.n);
  row += ',' + rec.m;
  row += ',' + short_double(rec.eps);
  row += ',' + std::to_string(rec.repeats);
  row += ',' + opt_str(rec.effective_shelves);
  row += ',' + rec.tv_witness;
  return row;
}

json to_json(const MixingRecord& rec) {
  json j;
  j["kind"] = "mixing";
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["eps"] = rec.eps;
  j["repeats"] = rec.repeats;
  j["effective_shelves"] = opt_json(rec.effective_shelves);
  j["tv_witness"] = rec.tv_witness;
  j["tv_places"] = kTvDecimalPlaces;
  return j;
}

std::string to_csv_row(const SimulateRecord& rec) {
  std::string row = std::to_string(rec.n);
  row += ',' + rec.m;
  row += ',' + std::to_string(rec.samples);
  row += ',' + std::to_string(rec.seed);
  row += ',' + rec.tv_empirical;
  row += ',' + rec.tv_exact;
  return row;
}

json to_json(const SimulateRecord& rec) {
  json j;
  j["kind"] = "simulate";
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["samples"] = rec.samples;
  j["seed"] = rec.seed;
  j["tv_empirical"] = rec.tv_empirical;
  j["tv_exact"] = rec.tv_exact;
  j["tv_places"] = kTvDecimalPlaces;
  return j;
}

}  // namespace shelfmix
