#pragma once

#include <cstddef>

// Compute kernels behind the layer engine. Every kernel exists twice with the
// same signature: `serial` is a direct loop nest kept as the reference, and
// `parallel` is the OpenMP implementation the engine runs. Tensors are
// row-major NCHW; weights are [out][in][kh][kw] for conv and [out][in] for
// dense layers. Outputs are overwritten, never accumulated into. Gradient
// pointers may be null to skip that gradient.
//
// The parallel kernels partition work by output element, so results do not
// depend on the thread count.

namespace coughlab::nn::kernels {

struct ConvGeom {
    std::size_t in_c, in_h, in_w;
    std::size_t out_c, k_h, k_w;
    std::size_t stride, pad;
    std::size_t out_h, out_w;

    std::size_t in_plane() const { return in_h * in_w; }
    std::size_t out_plane() const { return out_h * out_w; }
    std::size_t patch() const { return in_c * k_h * k_w; }
};

struct PoolGeom {
    std::size_t c, in_h, in_w;
    std::size_t k_h, k_w, stride;
    std::size_t out_h, out_w;
};

enum class Backend { Serial, Parallel };

#define COUGHLAB_KERNEL_DECLS                                                                      \
    template <class T>                                                                             \
    void conv2d_forward(const ConvGeom& g, std::size_t batch, const T* x, const T* w, const T* b, \
                        T* y);                                                                     \
    template <class T>                                                                             \
    void conv2d_backward(const ConvGeom& g, std::size_t batch, const T* x, const T* w, const T* dy, \
                         T* dw, T* db, T* dx);                                                     \
    template <class T>                                                                             \
    void maxpool_forward(const PoolGeom& g, std::size_t batch, const T* x, T* y, std::size_t* arg); \
    template <class T>                                                                             \
    void maxpool_backward(const PoolGeom& g, std::size_t batch, const T* dy, const std::size_t* arg, \
                          T* dx);                                                                  \
    template <class T>                                                                             \
    void dense_forward(std::size_t batch, std::size_t in, std::size_t out, const T* x, const T* w, \
                       const T* b, T* y);                                                          \
    template <class T>                                                                             \
    void dense_backward(std::size_t batch, std::size_t in, std::size_t out, const T* x, const T* w, \
                        const T* dy, T* dw, T* db, T* dx);

namespace serial {
COUGHLAB_KERNEL_DECLS
}

namespace parallel {
COUGHLAB_KERNEL_DECLS
}

#undef COUGHLAB_KERNEL_DECLS

}  // namespace coughlab::nn::kernels
