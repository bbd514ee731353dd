#ifndef VEDOM_ERROR_HPP
#define VEDOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vedom {

enum class errc {
    parse,
    validation,
    cap_exceeded,
    infeasible,
    not_a_tree,
    not_a_block_graph,
    disconnected,
    defect,
};

class error : public std::runtime_error {
public:
    error(errc kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

} // namespace vedom

#endif
