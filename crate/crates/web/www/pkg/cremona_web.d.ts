/* tslint:disable */
/* eslint-disable */

/**
 * Runs the full pipeline on α, given as nine entries separated by commas,
 * semicolons or whitespace, over `field` ("q" or "fp:<p>").
 */
export function analyze(field: string, alpha: string, bound: number): string;

/**
 * Signature, type, order or spectral radius of the Coxeter element of T_{p,q,r}.
 */
export function coxeter(p: number, q: number, r: number): string;

/**
 * The shipped fixtures: name, field, α as text and the recorded bound.
 */
export function fixtures_json(): string;

/**
 * μ(p,q,r) and L = 2 arccosh(μ/2) for 2 ≤ p ≤ q ≤ r ≤ p_max, 1/p + 1/q + 1/r ≤ 1.
 */
export function mu_table(p_max: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly coxeter: (a: number, b: number, c: number) => [number, number, number, number];
    readonly fixtures_json: () => [number, number, number, number];
    readonly mu_table: (a: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
