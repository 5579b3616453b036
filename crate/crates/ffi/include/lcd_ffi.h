#ifndef LCD_FFI_H
#define LCD_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Inner product selector: 0 = Euclidean, 1 = Hermitian.
 */
#define LCD_INNER_EUCLIDEAN 0

#define LCD_INNER_HERMITIAN 1

typedef enum LcdStatus {
  LCD_STATUS_OK = 0,
  LCD_STATUS_NULL_POINTER = 1,
  LCD_STATUS_INVALID_ARGUMENT = 2,
  LCD_STATUS_PARSE = 3,
  /**
   * Checked negative result (not LCD, nothing to descend, ...).
   */
  LCD_STATUS_DOMAIN = 4,
  LCD_STATUS_RESOURCE = 5,
  /**
   * Internal invariant failure or a caught panic.
   */
  LCD_STATUS_INTERNAL = 6,
  /**
   * Caller buffer too small; the required size is reported where possible.
   */
  LCD_STATUS_BUFFER_TOO_SMALL = 7,
} LcdStatus;

/**
 * Opaque code handle.
 */
typedef struct LcdCode LcdCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *lcd_last_error_message(void);

/**
 * Parses a code file held in a NUL-terminated UTF-8 string.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum LcdStatus lcd_code_parse(const char *text, struct LcdCode **out);

/**
 * Builds a code from a row-major `k x n` matrix of field codes
 * (GF(4): 0, 1, 2 = w, 3 = w^2).
 *
 * # Safety
 * `data` must point to `k * n` readable bytes (may be null when that is 0).
 */
enum LcdStatus lcd_code_from_rows(uint32_t q,
                                  uint32_t inner,
                                  size_t k,
                                  size_t n,
                                  const uint8_t *data,
                                  struct LcdCode **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `code` must come from this library and not be used afterwards.
 */
void lcd_code_free(struct LcdCode *code);

/**
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_n(const struct LcdCode *code, size_t *out);

/**
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_k(const struct LcdCode *code, size_t *out);

/**
 * Field order q (2, 3 or 4).
 *
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_field(const struct LcdCode *code, uint32_t *out);

/**
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_inner(const struct LcdCode *code, uint32_t *out);

/**
 * Copies the canonical generator (row-major, `k * n` bytes) into `buf`.
 * `needed`, if non-null, receives `k * n` even when the buffer is too small.
 *
 * # Safety
 * `buf` must have room for `len` bytes.
 */
enum LcdStatus lcd_code_generator(const struct LcdCode *code,
                                  uint8_t *buf,
                                  size_t len,
                                  size_t *needed);

/**
 * Gram-matrix LCD test. The zero code yields `Domain`.
 *
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_is_lcd(const struct LcdCode *code, bool *out);

/**
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_is_self_orthogonal(const struct LcdCode *code, bool *out);

/**
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_min_weight(const struct LcdCode *code, size_t *out);

/**
 * Dual code in the handle's own inner product.
 *
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_dual(const struct LcdCode *code, struct LcdCode **out);

/**
 * One descent step. The child handle goes to `out`; if `x` is non-null the
 * split-off vector (`n` bytes) is copied there, `x_len` must be at least `n`.
 *
 * # Safety
 * `code` and `out` must be valid; `x` must have room for `x_len` bytes.
 */
enum LcdStatus lcd_code_descend(const struct LcdCode *code,
                                struct LcdCode **out,
                                uint8_t *x,
                                size_t x_len);

/**
 * LCD `[n, k+1]` supercode obtained by adjoining a dual vector.
 *
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_ascend(const struct LcdCode *code, struct LcdCode **out);

/**
 * Code file text for the handle; release with `lcd_string_free`.
 *
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum LcdStatus lcd_code_to_string(const struct LcdCode *code, char **out);

/**
 * # Safety
 * `s` must come from this library (or be null) and not be used afterwards.
 */
void lcd_string_free(char *s);

/**
 * Largest minimum weight over all LCD `[n,k]` codes, by exhaustive search
 * under the default budget. `found` is false when no such code is LCD.
 *
 * # Safety
 * `d` and `found` must be valid pointers.
 */
enum LcdStatus lcd_largest_min_weight(uint32_t q,
                                      uint32_t inner,
                                      size_t n,
                                      size_t k,
                                      size_t workers,
                                      size_t *d,
                                      bool *found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCD_FFI_H */
