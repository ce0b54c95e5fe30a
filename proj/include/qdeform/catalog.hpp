#pragma once

#include <string>
#include <vector>

#include "qdeform/freealg.hpp"

namespace qdeform {

// Catalog ids: glq2, glq2_det, glq2_inv, slq2_group, slq2, osc_q, osc_q_qinv, osc_q_half,
// osc_alpha, osc_alpha_k, osc_A, osc_A_q2, rea2, rea2_c1, qplane, grassmann_plane, grassmann_plane_printed,
// two_planes, gauss_glq2, gauss_glq2_printed, suq11, osc_pair, osc_pair_qqinv
PresPtr build_presentation(const std::string& name);
std::vector<std::string> catalog_names();
// presentations listed by the audit (everything except documented printed alternatives)
std::vector<std::string> audited_catalog_names();

// JSON presentation file (see docs/presentation-format.md)
PresPtr load_presentation_json(const std::string& json_text);
std::string presentation_to_json(const Presentation& p);

// Helper for hand-written rule sets. Rules are parsed with the expression grammar.
class PresentationBuilder {
public:
    explicit PresentationBuilder(std::string name) : name_(std::move(name)) {}
    PresentationBuilder& gen(const std::string& n, int weight = 1);
    // adds the generator plus the two cancellation rules
    PresentationBuilder& inverse(const std::string& n, const std::string& of, int weight = 1);
    PresentationBuilder& rule(const std::string& lhs, const std::string& rhs);
    PresentationBuilder& alias(const std::string& n, const std::string& value);
    PresentationBuilder& note(const std::string& text);
    PresentationBuilder& star(std::vector<std::string> images);
    std::shared_ptr<Presentation> build() const;

private:
    std::string name_;
    std::vector<GeneratorSymbol> gens_;
    std::vector<std::pair<std::string, std::string>> rules_;
    std::vector<std::pair<std::string, std::string>> aliases_;
    std::vector<std::string> star_;
    std::string note_;
};

}  // namespace qdeform
