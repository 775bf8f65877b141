#include "pcoh/web.hpp"

#include "pcoh/errors.hpp"

namespace pcoh {

Web::Web(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (labels_[i].empty()) throw ParseError("empty web label at position " + std::to_string(i));
        auto [it, fresh] = index_.emplace(labels_[i], i);
        if (!fresh) throw ParseError("duplicate web label '" + labels_[i] + "'");
    }
}

std::optional<int> Web::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

WebPtr make_web(std::vector<std::string> labels) {
    return std::make_shared<const Web>(std::move(labels));
}

WebPtr numbered_web(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return make_web(std::move(labels));
}

std::string pair_label(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

WebPtr pair_web(const Web& left, const Web& right) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(left.size()) * right.size());
    for (int a = 0; a < left.size(); ++a)
        for (int b = 0; b < right.size(); ++b)
            labels.push_back(pair_label(left.label(a), right.label(b)));
    return make_web(std::move(labels));
}

WebPtr tagged_union_web(const std::vector<WebPtr>& parts) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (int i = 0; i < parts[k]->size(); ++i)
            labels.push_back(pair_label(std::to_string(k + 1), parts[k]->label(i)));
    return make_web(std::move(labels));
}

}  // namespace pcoh
