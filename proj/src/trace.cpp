#include "qcert/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

namespace qcert {

namespace {
void append_num(std::string& row, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    row += buf;
}
}  // namespace

std::vector<ClassSummary> summarize(const PacketTrace& trace) {
    std::map<int, ClassSummary> by_class;
    for (const auto& cls : trace.scenario.classes) {
        ClassSummary s;
        s.class_id = cls.class_id;
        s.tier = cls.tier;
        by_class[cls.class_id] = s;
    }

    std::map<int, std::vector<double>> delays;
    for (const auto& rec : trace.records) {
        if (rec.warmup) continue;
        auto it = by_class.find(rec.class_id);
        if (it == by_class.end()) continue;
        if (rec.delivered)
            delays[rec.class_id].push_back(rec.delay);
        else
            it->second.blocked += 1;
    }

    std::vector<ClassSummary> out;
    out.reserve(by_class.size());
    for (auto& [class_id, summary] : by_class) {
        auto it = delays.find(class_id);
        if (it != delays.end() && !it->second.empty()) {
            auto& xs = it->second;
            summary.empty = false;
            summary.delay = compute_stats(xs);
            std::sort(xs.begin(), xs.end());
            summary.p50 = nearest_rank_quantile(xs, 0.50);
            summary.p95 = nearest_rank_quantile(xs, 0.95);
            summary.p99 = nearest_rank_quantile(xs, 0.99);
        }
        out.push_back(std::move(summary));
    }
    return out;
}

void write_trace_csv(const PacketTrace& trace, std::ostream& out) {
    std::string body;
    body.reserve(trace.records.size() * 96 + 128);
    body += kTraceCsvHeader;
    body += '\n';
    for (const auto& rec : trace.records) {
        body += std::to_string(rec.packet_id);
        body += ',';
        body += std::to_string(rec.class_id);
        body += ',';
        body += to_string(rec.tier);
        body += ',';
        append_num(body, rec.arrival);
        body += ',';
        append_num(body, rec.service_demand);
        body += ',';
        if (rec.delivered) {
            append_num(body, rec.start);
            body += ',';
            append_num(body, rec.departure);
            body += ',';
            append_num(body, rec.wait);
            body += ',';
            append_num(body, rec.delay);
        } else {
            body += ",,,";
        }
        body += ',';
        body += rec.delivered ? '1' : '0';
        body += ',';
        body += rec.warmup ? '1' : '0';
        body += '\n';
    }
    out << body;
}

}  // namespace qcert
