#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcoh {

// A finite index set with printable labels. The order of labels is part of
// the structure: coordinates of vectors and matrix rows refer to positions.
//
// Structured labels follow fixed conventions so files stay readable:
//   pairs            "(a,b)"       (row-major: left index varies slowest)
//   tagged unions    "(1,a)"       (1-based component tag)
//   multisets        "[a,a,b]"     (entries sorted by base-web position)
//   finite sequences "0.1.2"       ("eps" for the empty sequence)
class Web {
public:
    explicit Web(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find(const std::string& label) const;

    bool operator==(const Web& other) const { return labels_ == other.labels_; }
    bool operator!=(const Web& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

using WebPtr = std::shared_ptr<const Web>;

WebPtr make_web(std::vector<std::string> labels);

// Web with labels "0", "1", ..., "n-1".
WebPtr numbered_web(int n);

// Pair web for products of index sets, row-major: index(a,b) = a*|right| + b.
WebPtr pair_web(const Web& left, const Web& right);
inline int pair_index(int a, int b, int right_size) { return a * right_size + b; }

// Tagged disjoint union; component k (0-based) occupies a contiguous block,
// labels "(k+1,original)". Offsets: block k starts at sum of earlier sizes.
WebPtr tagged_union_web(const std::vector<WebPtr>& parts);

std::string pair_label(const std::string& a, const std::string& b);

}  // namespace pcoh
