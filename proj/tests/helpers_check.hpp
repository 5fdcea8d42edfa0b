#pragma once

// Requires doctest.h to be included first.
#define CHECK_FAILS_WITH(kind_, ...)                        \
    do {                                                    \
        try {                                               \
            __VA_ARGS__;                                    \
            FAIL_CHECK("expected an error, none thrown");   \
        } catch (const wtab::Error& e_) {                   \
            CHECK(e_.kind() == (kind_));                    \
        }                                                   \
    } while (0)
