#pragma once

#include <array>

namespace shelfmix::testdata {

// Golden total-variation table for a 52-card deck, m = 1..300: the
// exact series at 5 decimal places and the matching normal-limit
// approximation series.
inline constexpr std::array<const char*, 300> kFigure1Exact = {
    "1.00000", "1.00000", "1.00000", "1.00000", "1.00000", "1.00000",
    "1.00000", "1.00000", "1.00000", "1.00000", "0.99998", "0.99969",
    "0.99705", "0.98161", "0.94267", "0.91010", "0.87735", "0.82808",
    "0.76857", "0.72009", "0.68840", "0.65337", "0.61678", "0.58001",
    "0.54403", "0.50949", "0.47678", "0.44609", "0.41750", "0.39098",
    "0.36646", "0.34443", "0.32864", "0.31359", "0.29930", "0.28575",
    "0.27293", "0.26081", "0.24937", "0.23856", "0.22836", "0.21873",
    "0.20964", "0.20105", "0.19294", "0.18528", "0.17804", "0.17118",
    "0.16470", "0.15855", "0.15273", "0.14721", "0.14197", "0.13700",
    "0.13227", "0.12778", "0.12350", "0.11943", "0.11555", "0.11185",
    "0.10833", "0.10496", "0.10175", "0.09867", "0.09574", "0.09293",
    "0.09023", "0.08766", "0.08519", "0.08282", "0.08055", "0.07836",
    "0.07627", "0.07426", "0.07232", "0.07046", "0.06867", "0.06694",
    "0.06528", "0.06368", "0.06214", "0.06065", "0.05921", "0.05783",
    "0.05649", "0.05520", "0.05395", "0.05274", "0.05158", "0.05045",
    "0.04935", "0.04830", "0.04727", "0.04628", "0.04532", "0.04439",
    "0.04348", "0.04261", "0.04176", "0.04093", "0.04013", "0.03935",
    "0.03860", "0.03786", "0.03715", "0.03646", "0.03578", "0.03513",
    "0.03449", "0.03387", "0.03326", "0.03267", "0.03210", "0.03154",
    "0.03100", "0.03047", "0.02995", "0.02945", "0.02896", "0.02848",
    "0.02801", "0.02756", "0.02711", "0.02668", "0.02626", "0.02584",
    "0.02544", "0.02505", "0.02466", "0.02428", "0.02391", "0.02356",
    "0.02320", "0.02286", "0.02252", "0.02219", "0.02187", "0.02156",
    "0.02125", "0.02095", "0.02065", "0.02036", "0.02008", "0.01980",
    "0.01953", "0.01927", "0.01901", "0.01875", "0.01850", "0.01825",
    "0.01801", "0.01778", "0.01755", "0.01732", "0.01710", "0.01688",
    "0.01667", "0.01646", "0.01625", "0.01605", "0.01585", "0.01566",
    "0.01546", "0.01528", "0.01509", "0.01491", "0.01473", "0.01456",
    "0.01439", "0.01422", "0.01405", "0.01389", "0.01373", "0.01357",
    "0.01342", "0.01327", "0.01312", "0.01297", "0.01283", "0.01269",
    "0.01255", "0.01241", "0.01227", "0.01214", "0.01201", "0.01188",
    "0.01176", "0.01163", "0.01151", "0.01139", "0.01127", "0.01115",
    "0.01104", "0.01092", "0.01081", "0.01070", "0.01059", "0.01049",
    "0.01038", "0.01028", "0.01018", "0.01008", "0.00998", "0.00988",
    "0.00978", "0.00969", "0.00960", "0.00950", "0.00941", "0.00932",
    "0.00924", "0.00915", "0.00906", "0.00898", "0.00890", "0.00881",
    "0.00873", "0.00865", "0.00857", "0.00850", "0.00842", "0.00834",
    "0.00827", "0.00820", "0.00812", "0.00805", "0.00798", "0.00791",
    "0.00784", "0.00777", "0.00771", "0.00764", "0.00758", "0.00751",
    "0.00745", "0.00738", "0.00732", "0.00726", "0.00720", "0.00714",
    "0.00708", "0.00702", "0.00697", "0.00691", "0.00685", "0.00680",
    "0.00674", "0.00669", "0.00663", "0.00658", "0.00653", "0.00648",
    "0.00643", "0.00638", "0.00633", "0.00628", "0.00623", "0.00618",
    "0.00613", "0.00608", "0.00604", "0.00599", "0.00595", "0.00590",
    "0.00586", "0.00581", "0.00577", "0.00573", "0.00568", "0.00564",
    "0.00560", "0.00556", "0.00552", "0.00548", "0.00544", "0.00540",
    "0.00536", "0.00532", "0.00528", "0.00525", "0.00521", "0.00517",
    "0.00514", "0.00510", "0.00506", "0.00503", "0.00499", "0.00496",
    "0.00493", "0.00489", "0.00486", "0.00482", "0.00479", "0.00476",
    "0.00473", "0.00470", "0.00466", "0.00463", "0.00460", "0.00457",
};

inline constexpr std::array<double, 300> kFigure1Asym = {
    1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0,
    1.0, 1.0, 0.99998, 0.99964, 0.99764, 0.99125, 0.97761, 0.95527,
    0.92459, 0.88724, 0.84537, 0.80107, 0.75605, 0.71161, 0.66862, 0.62765,
    0.589, 0.55282, 0.5191, 0.48779, 0.45879, 0.43195, 0.40714, 0.38419,
    0.36296, 0.34332, 0.32512, 0.30825, 0.29259, 0.27804, 0.26451, 0.2519,
    0.24015, 0.22917, 0.21891, 0.20931, 0.20031, 0.19187, 0.18394, 0.17648,
    0.16946, 0.16285, 0.15661, 0.15071, 0.14514, 0.13987, 0.13488, 0.13015,
    0.12566, 0.1214, 0.11735, 0.1135, 0.10983, 0.10634, 0.10301, 0.09983,
    0.0968, 0.0939, 0.09113, 0.08848, 0.08595, 0.08352, 0.08119, 0.07896,
    0.07682, 0.07476, 0.07278, 0.07089, 0.06906, 0.06731, 0.06562, 0.06399,
    0.06242, 0.06091, 0.05946, 0.05805, 0.0567, 0.05539, 0.05412, 0.0529,
    0.05172, 0.05058, 0.04948, 0.04841, 0.04737, 0.04637, 0.0454, 0.04446,
    0.04355, 0.04267, 0.04181, 0.04098, 0.04017, 0.03939, 0.03863, 0.03789,
    0.03717, 0.03648, 0.0358, 0.03514, 0.0345, 0.03387, 0.03327, 0.03267,
    0.0321, 0.03154, 0.03099, 0.03046, 0.02994, 0.02944, 0.02895, 0.02847,
    0.028, 0.02754, 0.02709, 0.02666, 0.02623, 0.02582, 0.02541, 0.02502,
    0.02463, 0.02426, 0.02389, 0.02353, 0.02317, 0.02283, 0.02249, 0.02216,
    0.02184, 0.02153, 0.02122, 0.02092, 0.02062, 0.02033, 0.02005, 0.01977,
    0.0195, 0.01923, 0.01897, 0.01872, 0.01847, 0.01822, 0.01798, 0.01774,
    0.01751, 0.01729, 0.01706, 0.01685, 0.01663, 0.01642, 0.01622, 0.01601,
    0.01582, 0.01562, 0.01543, 0.01524, 0.01506, 0.01488, 0.0147, 0.01453,
    0.01435, 0.01419, 0.01402, 0.01386, 0.0137, 0.01354, 0.01339, 0.01323,
    0.01309, 0.01294, 0.0128, 0.01265, 0.01251, 0.01238, 0.01224, 0.01211,
    0.01198, 0.01185, 0.01172, 0.0116, 0.01148, 0.01136, 0.01124, 0.01112,
    0.01101, 0.01089, 0.01078, 0.01067, 0.01056, 0.01046, 0.01035, 0.01025,
    0.01015, 0.01005, 0.00995, 0.00985, 0.00976, 0.00966, 0.00957, 0.00948,
    0.00939, 0.0093, 0.00921, 0.00912, 0.00904, 0.00895, 0.00887, 0.00879,
    0.00871, 0.00863, 0.00855, 0.00847, 0.00839, 0.00832, 0.00824, 0.00817,
    0.0081, 0.00803, 0.00796, 0.00789, 0.00782, 0.00775, 0.00768, 0.00762,
    0.00755, 0.00749, 0.00742, 0.00736, 0.0073, 0.00724, 0.00718, 0.00712,
    0.00706, 0.007, 0.00694, 0.00689, 0.00683, 0.00677, 0.00672, 0.00667,
    0.00661, 0.00656, 0.00651, 0.00646, 0.00641, 0.00635, 0.0063, 0.00626,
    0.00621, 0.00616, 0.00611, 0.00606, 0.00602, 0.00597, 0.00593, 0.00588,
    0.00584, 0.00579, 0.00575, 0.00571, 0.00567, 0.00562, 0.00558, 0.00554,
    0.0055, 0.00546, 0.00542, 0.00538, 0.00534, 0.0053, 0.00527, 0.00523,
    0.00519, 0.00516, 0.00512, 0.00508, 0.00505, 0.00501, 0.00498, 0.00494,
    0.00491, 0.00487, 0.00484, 0.00481, 0.00478, 0.00474, 0.00471, 0.00468,
    0.00465, 0.00462, 0.00459, 0.00456,
};

}  // namespace shelfmix::testdata
