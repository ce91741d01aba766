#include "benney/variable.hpp"

#include <cctype>

#include "benney/errors.hpp"

namespace benney {

int Variable::weight() const {
    switch (kind_) {
        case VarKind::Time:
            return -2;
        case VarKind::Space:
            return -1;
        case VarKind::Moment:
            return index_ + 2;
        case VarKind::MomentX:
            return index_ + 3;
        case VarKind::MomentXX:
            return index_ + 4;
    }
    return 0;  // unreachable
}

std::string Variable::name() const {
    switch (kind_) {
        case VarKind::Time:
            return "t";
        case VarKind::Space:
            return "x";
        case VarKind::Moment:
            return "A" + std::to_string(index_);
        case VarKind::MomentX:
            return "A" + std::to_string(index_) + "_x";
        case VarKind::MomentXX:
            return "A" + std::to_string(index_) + "_xx";
    }
    return {};  // unreachable
}

Variable variable_from_name(const std::string& name) {
    if (name == "t") return Variable::time();
    if (name == "x") return Variable::space();
    if (name.size() >= 2 && name[0] == 'A') {
        std::size_t pos = 1;
        while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
        if (pos > 1 && (name[1] != '0' || pos == 2)) {  // no leading zeros
            int index = std::stoi(name.substr(1, pos - 1));
            std::string suffix = name.substr(pos);
            if (suffix.empty()) return Variable::moment(index);
            if (suffix == "_x") return Variable::moment_x(index);
            if (suffix == "_xx") return Variable::moment_xx(index);
        }
    }
    throw ParseError("unknown variable name: '" + name + "'");
}

}  // namespace benney
