#include "apsym/report.hpp"

#include "apsym/errors.hpp"
#include "apsym/format.hpp"

#include <sstream>

namespace apsym {

namespace {

std::string residual_text(Residual const &r)
{
	return std::visit([](auto const &v) { return to_text(v); }, r);
}

std::string residual_latex(Residual const &r)
{
	return std::visit([](auto const &v) { return to_latex(v); }, r);
}

nlohmann::json hierarchy_json(HierarchyResult const &h)
{
	nlohmann::json j;
	j["flows"] = nlohmann::json::array();
	for (auto const &K : h.flows)
		j["flows"].push_back(to_text(K));
	j["functionals"] = nlohmann::json::array();
	for (auto const &H : h.functionals)
		j["functionals"].push_back(H ? nlohmann::json(to_text(H->density)) : nlohmann::json(nullptr));
	if (h.stopped_at)
	{
		nlohmann::json s;
		s["index"] = h.stopped_at->index;
		s["reason"] = h.stopped_at->reason;
		s["obstruction"] = nlohmann::json::array();
		for (auto const &o : h.stopped_at->obstruction)
			s["obstruction"].push_back(to_text(o));
		j["stopped_at"] = s;
	}
	else
		j["stopped_at"] = nullptr;
	return j;
}

void text_check(std::ostream &os, CheckReport const &c, int indent)
{
	std::string pad(indent, ' ');
	os << pad << "[" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
	os << pad << "    residual: " << residual_text(c.residual) << "\n";
	if (c.obstruction)
		os << pad << "    obstruction: " << to_text(*c.obstruction) << "\n";
	if (c.functional)
		os << pad << "    density: " << to_text(c.functional->density) << "\n";
	if (c.flux)
		os << pad << "    flux: " << to_text(*c.flux) << "\n";
	if (c.hierarchy)
	{
		auto const &h = *c.hierarchy;
		for (size_t i = 0; i < h.flows.size(); ++i)
		{
			os << pad << "    K" << i << " = " << to_text(h.flows[i]) << "\n";
			if (h.functionals[i])
				os << pad << "    H" << i << " = int " << to_text(h.functionals[i]->density) << " dx\n";
			else
				os << pad << "    H" << i << " : none\n";
		}
		if (h.stopped_at)
		{
			os << pad << "    stopped at " << h.stopped_at->index << ": " << h.stopped_at->reason << "\n";
			for (auto const &o : h.stopped_at->obstruction)
				os << pad << "    obstruction: " << to_text(o) << "\n";
		}
	}
	for (auto const &n : c.notes)
		os << pad << "    note: " << n << "\n";
	for (auto const &child : c.children)
		text_check(os, child, indent + 4);
}

std::string latex_escape(std::string s)
{
	std::string out;
	for (char ch : s)
	{
		if (ch == '_' || ch == '&' || ch == '%' || ch == '#' || ch == '{' || ch == '}')
			out += '\\';
		out += ch;
	}
	return out;
}

void latex_check(std::ostream &os, CheckReport const &c)
{
	os << "\\item[" << latex_escape(c.name) << "] " << (c.pass ? "pass" : "fail")
	   << ", residual $" << residual_latex(c.residual) << "$";
	if (c.obstruction)
		os << ", obstruction $" << to_latex(*c.obstruction) << "$";
	if (c.functional)
		os << ", density $\\int " << to_latex(c.functional->density) << "\\,dx$";
	if (c.flux)
		os << ", flux $" << to_latex(*c.flux) << "$";
	os << "\n";
	if (c.hierarchy)
	{
		auto const &h = *c.hierarchy;
		os << "\\begin{align*}\n";
		for (size_t i = 0; i < h.flows.size(); ++i)
		{
			os << "K_{" << i << "} &= " << to_latex(h.flows[i]) << "\\\\\n";
			if (h.functionals[i])
				os << "\\mathcal{H}_{" << i << "} &= \\int " << to_latex(h.functionals[i]->density)
				   << "\\,dx\\\\\n";
		}
		os << "\\end{align*}\n";
	}
	if (!c.children.empty())
	{
		os << "\\begin{description}\n";
		for (auto const &child : c.children)
			latex_check(os, child);
		os << "\\end{description}\n";
	}
}

} // namespace

ReportFormat parse_report_format(std::string const &name)
{
	if (name == "text")
		return ReportFormat::Text;
	if (name == "json")
		return ReportFormat::Json;
	if (name == "latex")
		return ReportFormat::Latex;
	throw Unsupported("unknown report format '" + name + "'");
}

bool Report::pass() const
{
	for (auto const &c : checks)
		if (!c.pass)
			return false;
	return true;
}

nlohmann::json to_json(CheckReport const &c)
{
	nlohmann::json j;
	j["name"] = c.name;
	j["verdict"] = c.pass ? "pass" : "fail";
	j["residual"] = residual_text(c.residual);
	if (c.obstruction)
		j["obstruction"] = to_text(*c.obstruction);
	nlohmann::json cert = nlohmann::json::object();
	if (c.flux)
		cert["flux"] = to_text(*c.flux);
	if (c.functional)
		cert["density"] = to_text(c.functional->density);
	if (c.hierarchy)
		cert["hierarchy"] = hierarchy_json(*c.hierarchy);
	j["certificates"] = cert;
	if (!c.notes.empty())
		j["notes"] = c.notes;
	if (!c.children.empty())
	{
		j["checks"] = nlohmann::json::array();
		for (auto const &child : c.children)
			j["checks"].push_back(to_json(child));
	}
	return j;
}

nlohmann::json to_json(Report const &r)
{
	nlohmann::json j;
	j["command"] = r.command;
	j["model_hash"] = r.model_hash;
	j["eps_order"] = r.settings.eps_order;
	j["max_jet_order"] = r.settings.max_jet_order;
	j["assumptions"] = r.assumptions;
	j["checks"] = nlohmann::json::array();
	for (auto const &c : r.checks)
		j["checks"].push_back(to_json(c));
	return j;
}

std::string emit_report(Report const &r, ReportFormat format)
{
	std::ostringstream os;
	switch (format)
	{
	case ReportFormat::Json:
		os << to_json(r).dump(2) << "\n";
		break;
	case ReportFormat::Text:
		os << r.command << "  (eps order " << r.settings.eps_order << ", jet order cap "
		   << r.settings.max_jet_order << ", model " << r.model_hash.substr(0, 12) << ")\n";
		for (auto const &a : r.assumptions)
			os << "assumption: " << a << "\n";
		for (auto const &c : r.checks)
			text_check(os, c, 0);
		os << (r.pass() ? "all checks passed" : "some checks failed") << "\n";
		break;
	case ReportFormat::Latex:
		os << "% " << latex_escape(r.command) << ", eps order " << r.settings.eps_order
		   << ", jet order cap " << r.settings.max_jet_order << ", model " << r.model_hash << "\n";
		for (auto const &a : r.assumptions)
			os << "% assumption: " << a << "\n";
		os << "\\begin{description}\n";
		for (auto const &c : r.checks)
			latex_check(os, c);
		os << "\\end{description}\n";
		break;
	}
	return os.str();
}

} // namespace apsym
