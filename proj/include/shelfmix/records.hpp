#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shelfmix/tv.hpp"

namespace shelfmix {

using json = nlohmann::ordered_json;

inline constexpr int kDeltaDecimalPlaces = 10;

// One row of a TV table. All numeric fields are pre-rendered decimal
// strings; absent fields render as empty CSV cells / JSON nulls. Column
// names are stable.
struct TvRecord {
  int n = 0;
  std::string m;
  std::optional<std::string> tv_exact;
  std::optional<std::string> tv_asymptotic;
  std::optional<int> argmax_k;
  std::optional<std::string> delta_minus;
  std::optional<std::string> delta_plus;
};

inline constexpr const char* kTvCsvHeader =
    "m,tv_exact,tv_asymptotic,argmax_k,delta_minus,delta_plus";

TvRecord make_tv_record(const TVReport& report, bool with_exact, bool with_asymptotic);

std::string to_csv_row(const TvRecord& rec);
json to_json(const TvRecord& rec);

struct ProfileRecord {
  int n = 0;
  double theta = 0.0;
  std::string tv_asymptotic;
};

inline constexpr const char* kProfileCsvHeader = "theta,tv_asymptotic";

std::string to_csv_row(const ProfileRecord& rec);
json to_json(const ProfileRecord& rec);

struct MixingRecord {
  int n = 0;
  std::string m;
  double eps = 0.0;
  int repeats = 0;
  std::optional<std::string> effective_shelves;  // absent when repeats == 0
  std::string tv_witness;
};

inline constexpr const char* kMixingCsvHeader =
    "n,m,eps,repeats,effective_shelves,tv_witness";

std::string to_csv_row(const MixingRecord& rec);
json to_json(const MixingRecord& rec);

struct SimulateRecord {
  int n = 0;
  std::string m;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string tv_empirical;
  std::string tv_exact;
};

inline constexpr const char* kSimulateCsvHeader =
    "n,m,samples,seed,tv_empirical,tv_exact";

std::string to_csv_row(const SimulateRecord& rec);
json to_json(const SimulateRecord& rec);

// Fixed-precision rendering helpers shared by the CLI surface.
std::string double_decimal(double v, int places);
std::string short_double(double v);  // shortest %.10g form, for grid values

}  // namespace shelfmix
