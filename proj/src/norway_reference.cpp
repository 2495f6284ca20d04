#include "tailfit/norway_reference.hpp"

namespace tailfit {

namespace {

struct ReferenceRow {
    const char* region;
    double income[4];  // 2010..2013
    double wealth[4];
};

// Transcribed from the published 2010-2013 regional exponent table.
constexpr ReferenceRow kReferenceRows[] = {
    {"Akershus", {2.45, 3.00, 2.34, 2.45}, {1.14, 1.21, 1.23, 1.43}},
    {"Aust-Agder", {2.22, 2.19, 1.70, 1.58}, {1.20, 1.13, 1.14, 1.16}},
    {"Buskerud", {2.11, 1.63, 1.75, 2.11}, {1.43, 1.26, 1.25, 1.50}},
    {"Finnmark", {2.90, 2.69, 2.94, 2.90}, {1.63, 1.63, 1.61, 1.81}},
    {"Hedmark", {2.12, 2.14, 1.14, 2.12}, {1.61, 1.67, 1.66, 1.86}},
    {"Hordaland", {2.13, 2.13, 1.78, 1.69}, {1.25, 1.18, 1.23, 1.13}},
    {"Møre Og Romsdal", {2.42, 1.54, 2.19, 2.42}, {1.46, 1.54, 1.94, 1.62}},
    {"Nordland", {2.15, 2.59, 1.88, 2.47}, {2.08, 1.84, 1.75, 2.25}},
    {"Nord-Trøndelag", {2.93, 2.30, 2.04, 2.95}, {2.46, 2.26, 1.93, 2.05}},
    {"Oppland", {2.26, 2.53, 2.12, 2.47}, {1.88, 1.85, 1.83, 1.92}},
    {"Oslo", {1.53, 1.90, 2.55, 2.05}, {1.26, 1.37, 1.40, 1.44}},
    {"Østfold", {1.90, 2.12, 2.37, 1.60}, {1.81, 2.08, 2.19, 1.95}},
    {"Rogaland", {1.82, 2.32, 2.28, 2.58}, {1.65, 1.57, 1.54, 1.54}},
    {"Sogn Og Fjordane", {2.55, 2.19, 2.50, 2.05}, {1.44, 1.36, 1.36, 1.36}},
    {"Sør Trøndelag", {1.72, 1.51, 1.79, 2.01}, {1.75, 1.55, 1.42, 1.49}},
    {"Telemark", {2.87, 2.54, 2.39, 2.60}, {1.35, 1.35, 1.44, 1.47}},
    {"Troms", {2.11, 1.23, 2.60, 2.41}, {1.45, 1.43, 1.54, 1.00}},
    {"Vest-Agder", {2.11, 2.22, 2.11, 2.09}, {1.02, 1.03, 0.97, 1.48}},
    {"Vestfold", {2.22, 2.23, 2.37, 2.52}, {1.34, 1.55, 1.54, 1.67}},
    {"NORWAY", {1.69, 1.77, 2.01, 1.72}, {1.37, 1.35, 1.37, 1.55}},
};

}  // namespace

const ExponentTable& norway_reference_exponents() {
    static const ExponentTable table = [] {
        ExponentTable t;
        for (const ReferenceRow& row : kReferenceRows) {
            for (std::size_t i = 0; i < norway_reference_years.size(); ++i) {
                const int year = norway_reference_years[i];
                t.set({row.region, year, Kind::income}, {row.income[i], std::nullopt});
                t.set({row.region, year, Kind::wealth}, {row.wealth[i], std::nullopt});
            }
        }
        return t;
    }();
    return table;
}

}  // namespace tailfit
