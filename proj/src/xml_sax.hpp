#pragma once

#include "vulnmap/errors.hpp"

#include <expat.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vulnmap::detail {

using XmlAttrs = std::map<std::string, std::string, std::less<>>;

// Thin callback adapter over expat.  Element names are reported without any
// namespace prefix, and the element stack is available to handlers so they
// can tell nested elements with the same name apart.
class SaxHandler {
public:
    virtual ~SaxHandler() = default;
    virtual void on_start(std::string_view name, const XmlAttrs& attrs) = 0;
    virtual void on_end(std::string_view name, const std::string& text) = 0;

    const std::vector<std::string>& stack() const { return stack_; }
    std::string_view parent(std::size_t up = 1) const {
        return stack_.size() > up ? std::string_view(stack_[stack_.size() - 1 - up]) : std::string_view{};
    }

    void parse(std::string_view raw, const char* what) {
        XML_Parser p = XML_ParserCreate(nullptr);
        XML_SetUserData(p, this);
        XML_SetElementHandler(p, &SaxHandler::start_cb, &SaxHandler::end_cb);
        XML_SetCharacterDataHandler(p, &SaxHandler::text_cb);
        const bool ok = XML_Parse(p, raw.data(), static_cast<int>(raw.size()), XML_TRUE) != XML_STATUS_ERROR;
        if (!ok) {
            const auto offset = static_cast<std::size_t>(XML_GetCurrentByteIndex(p));
            const std::string msg = std::string(what) + ": " + XML_ErrorString(XML_GetErrorCode(p));
            XML_ParserFree(p);
            throw ParseError(msg, offset);
        }
        XML_ParserFree(p);
        if (pending_error_) throw Error(*pending_error_, pending_code_);
    }

protected:
    // Handlers must not throw through expat's C frames; they record the first
    // failure here and parse() rethrows it once expat has returned.
    void fail(const std::string& msg, ExitCode code) {
        if (!pending_error_) {
            pending_error_ = msg;
            pending_code_ = code;
        }
    }

private:
    static std::string_view local_name(const XML_Char* name) {
        std::string_view n(name);
        const auto colon = n.rfind(':');
        return colon == std::string_view::npos ? n : n.substr(colon + 1);
    }

    static void start_cb(void* ud, const XML_Char* name, const XML_Char** atts) {
        auto* self = static_cast<SaxHandler*>(ud);
        XmlAttrs attrs;
        for (int i = 0; atts[i]; i += 2) attrs.emplace(local_name(atts[i]), atts[i + 1]);
        self->stack_.emplace_back(local_name(name));
        self->text_.emplace_back();
        try {
            self->on_start(self->stack_.back(), attrs);
        } catch (const std::exception& e) {
            self->fail(e.what(), ExitCode::input);
        }
    }

    static void end_cb(void* ud, const XML_Char*) {
        auto* self = static_cast<SaxHandler*>(ud);
        std::string text = std::move(self->text_.back());
        const std::string name = self->stack_.back();
        try {
            self->on_end(name, text);
        } catch (const std::exception& e) {
            self->fail(e.what(), ExitCode::input);
        }
        self->text_.pop_back();
        self->stack_.pop_back();
    }

    static void text_cb(void* ud, const XML_Char* s, int len) {
        auto* self = static_cast<SaxHandler*>(ud);
        if (!self->text_.empty()) self->text_.back().append(s, static_cast<std::size_t>(len));
    }

    std::vector<std::string> stack_;
    std::vector<std::string> text_;
    std::optional<std::string> pending_error_;
    ExitCode pending_code_ = ExitCode::input;
};

}  // namespace vulnmap::detail
