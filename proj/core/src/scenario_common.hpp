#pragma once

#include "qhopf/galois.hpp"
#include "qhopf/presets.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

/// Records checks with the symbolic result cross-validated numerically at the
/// standard rational point (q=3/2, p=1/3, mu=4, nu=1, t=2).
class Recorder {
public:
    explicit Recorder(ReportBuilder& rb) : rb_(rb), pt_(NumericPoint::standard()) {}

    void boolean(const std::string& id, const std::string& desc, const std::string& ref, bool ok,
                 nlohmann::ordered_json data = nlohmann::ordered_json::object()) {
        rb_.add(id, desc, ref, ok ? CheckStatus::pass : CheckStatus::fail, std::move(data));
    }

    void finding(const std::string& id, const std::string& desc, const std::string& ref,
                 nlohmann::ordered_json data = nlohmann::ordered_json::object()) {
        rb_.add(id, desc, ref, CheckStatus::finding, std::move(data));
    }

    void inconclusive(const std::string& id, const std::string& desc, const std::string& ref,
                      nlohmann::ordered_json data = nlohmann::ordered_json::object()) {
        rb_.add(id, desc, ref, CheckStatus::inconclusive, std::move(data));
    }

    void axioms(const std::string& id, const std::string& desc, const std::string& ref,
                const AxiomReport& rep) {
        nlohmann::ordered_json data;
        data["checks"] = rep.checks;
        if (rep.skipped > 0) data["skipped_at_boundary"] = rep.skipped;
        if (!rep.ok()) {
            auto fails = nlohmann::ordered_json::array();
            for (const auto& f : rep.failures) fails.push_back(f.axiom + " @ " + f.witness);
            data["failures"] = fails;
        }
        rb_.add(id, desc, ref, rep.ok() ? CheckStatus::pass : CheckStatus::fail, std::move(data));
    }

    void eq(const std::string& id, const std::string& desc, const std::string& ref, const NcPoly& lhs,
            const NcPoly& rhs, nlohmann::ordered_json data = nlohmann::ordered_json::object()) {
        bool sym = lhs == rhs;
        bool num = numeric_equal(lhs, rhs, pt_);
        if (!sym) data["residual"] = (lhs - rhs).to_string();
        if (!num) data["numeric"] = "disagrees at the rational sample point";
        rb_.add(id, desc, ref, sym && num ? CheckStatus::pass : CheckStatus::fail, std::move(data));
    }

    void eq(const std::string& id, const std::string& desc, const std::string& ref, const Tensor2& lhs,
            const Tensor2& rhs, nlohmann::ordered_json data = nlohmann::ordered_json::object()) {
        bool sym = lhs == rhs;
        bool num = numeric_equal(lhs, rhs, pt_);
        if (!sym) data["residual"] = (lhs - rhs).to_string();
        if (!num) data["numeric"] = "disagrees at the rational sample point";
        rb_.add(id, desc, ref, sym && num ? CheckStatus::pass : CheckStatus::fail, std::move(data));
    }

    void eq(const std::string& id, const std::string& desc, const std::string& ref,
            const FieldElement& lhs, const FieldElement& rhs,
            nlohmann::ordered_json data = nlohmann::ordered_json::object()) {
        bool sym = lhs == rhs;
        bool num = lhs.evaluate(pt_) == rhs.evaluate(pt_);
        if (!sym) data["residual"] = (lhs - rhs).to_string();
        if (!num) data["numeric"] = "disagrees at the rational sample point";
        rb_.add(id, desc, ref, sym && num ? CheckStatus::pass : CheckStatus::fail, std::move(data));
    }

    const NumericPoint& point() const { return pt_; }

private:
    ReportBuilder& rb_;
    NumericPoint pt_;
};

/// Subspace comparison by double elimination over a shared word table.
struct SpanCompare {
    bool equal = false;
    bool left_in_right = false;
    bool right_in_left = false;
    int dim_left = 0;
    int dim_right = 0;
};

SpanCompare compare_spans(const WordTable& table, const std::vector<NcPoly>& left,
                          const std::vector<NcPoly>& right);

/// Representative word beta^m c^n of the plane-quotient class a_{m,n}.
Word amn_word(const Presentation& glq2, int m, int n);

}  // namespace qhopf
