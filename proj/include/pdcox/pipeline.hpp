#pragma once

// One-call pipeline: klt certificate, class group, fundamental group,
// iteration data and the canonical cover, bundled as a single JSON report.

#include "pdcox/coxring.hpp"
#include "pdcox/io.hpp"
#include "pdcox/iteration.hpp"
#include "pdcox/pdiv.hpp"

namespace pdcox {

inline Json full_pipeline(const PolyhedralDivisor& d, long max_cosets = 200000) {
    d.require_proper();
    KltCertificate cert = klt_certificate(d);

    Json j;
    j["klt"] = to_json(cert);
    Json triple = Json::array();
    for (const auto& x : cert.triple) triple.push_back(x.get_str());
    j["triple"] = triple;
    if (cert.is_klt) {
        j["class_group"] = to_json(class_group_of(d));
        j["cox"] = to_json(platonic_cox(d));
        j["pi1"] = to_json(pi1_report(d, static_cast<std::size_t>(max_cosets)));
        j["iteration"] = to_json(divisor_iteration(d, max_cosets));
        j["scfc"] = to_json(scfc(d, max_cosets));
    } else {
        j["class_group"] = nullptr;
        j["cox"] = nullptr;
        j["pi1"] = to_json(pi1_report(d, static_cast<std::size_t>(max_cosets)));
        j["iteration"] = nullptr;
        j["scfc"] = nullptr;
    }
    return j;
}

}  // namespace pdcox
