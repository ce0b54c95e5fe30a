#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdeform/hopf.hpp"

namespace qdeform {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { pass, fail, info };
std::string status_name(Status s);

struct ReportItem {
    std::string id;
    Status status = Status::pass;
    std::string residual;         // symbolic residual, or the printed number
    std::optional<double> value;  // numeric residual when there is one
    std::string notes;
};

struct SuiteOptions {
    double q0 = 0.7;
    int dim = 16;
    int degree = 2;
    double contraction_q0 = 0.5;
    std::vector<int> contraction_js{2, 4, 6, 8};
};

struct Report {
    std::string suite;
    SuiteOptions opts;
    std::vector<ReportItem> items;

    bool ok() const;
    void add(const CheckItem& c);
    void add_number(const std::string& id, double value, bool pass, std::string notes = {});
    void add_info(const std::string& id, std::string residual, std::string notes = {});
};

std::string report_json(const Report& r);
std::string report_text(const Report& r);

std::vector<std::string> suite_names();  // without "all"
// throws AlgebraError for an unknown suite; "all" runs every suite
Report run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace qdeform
