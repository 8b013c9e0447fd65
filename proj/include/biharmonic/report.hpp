#ifndef BIHARMONIC_REPORT_HPP
#define BIHARMONIC_REPORT_HPP

#include "biharmonic/chen_example.hpp"
#include "biharmonic/classify.hpp"
#include "biharmonic/form_algebra.hpp"

#include <json.hpp>

#include <string>

namespace biharmonic {

using Json = nlohmann::ordered_json;

enum class ReportFormat { json, table };

Json classification_json(const ClassificationResult& r);
std::string classification_table(const ClassificationResult& r);
std::string render(const ClassificationResult& r, ReportFormat format);

Json family_json(const FamilySpec& f); // catalog dump entry
Json verification_json(const VerificationReport& r);
std::string verification_table(const VerificationReport& r);
Json inequality_json(const InequalityReport& r);
std::string inequality_table(const InequalityReport& r);

} // namespace biharmonic

#endif
