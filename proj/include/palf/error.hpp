#pragma once

#include <stdexcept>
#include <string>

namespace palf {

enum class ErrorKind {
    Syntax,
    StrandCount,
    Unclosed,
    Component,
    Handle,
    Range,
    Argument,
    Audit,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(format(msg, line, column)), kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        std::string pos = "line " + std::to_string(line);
        if (column > 0) pos += ", col " + std::to_string(column);
        return pos + ": " + msg;
    }

    ErrorKind kind_;
    int line_;
    int column_;
};

}  // namespace palf
