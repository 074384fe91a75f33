#pragma once

#include <initializer_list>

#include "mbal/frame.hpp"
#include "mbal/func.hpp"
#include "mbal/rational.hpp"

namespace testing {

// ({0,1,2}, {(0,1),(0,2),(1,1)})
inline mbal::FramePtr f1()
{
    return mbal::share(mbal::Frame{{"0", "1", "2"}, {{0, 1}, {0, 2}, {1, 1}}});
}

// 0R1, 1R2
inline mbal::FramePtr chain3()
{
    return mbal::share(mbal::Frame{{"0", "1", "2"}, {{0, 1}, {1, 2}}});
}

inline mbal::Func fn(const mbal::FramePtr& frame, std::initializer_list<mbal::Rational> values)
{
    return mbal::Func{frame, mbal::Values(values.begin(), values.end())};
}

inline mbal::PointSet set(std::initializer_list<mbal::PointIndex> points)
{
    mbal::PointSet s;
    for (auto p : points) {
        s.insert(p);
    }
    return s;
}

} // namespace testing
