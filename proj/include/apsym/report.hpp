#pragma once

#include "apsym/engine.hpp"
#include "apsym/model.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace apsym {

enum class ReportFormat
{
	Text,
	Json,
	Latex
};

ReportFormat parse_report_format(std::string const &name);

struct Report
{
	std::string command;
	std::string model_hash;
	ModelSettings settings;
	std::vector<std::string> assumptions;
	std::vector<CheckReport> checks;

	bool pass() const;
};

nlohmann::json to_json(CheckReport const &c);
nlohmann::json to_json(Report const &r);

std::string emit_report(Report const &r, ReportFormat format);

} // namespace apsym
