/** Wire types of the ninthpoint JSON service and the fetch wrapper. */

export type Method = "det" | "reduced" | "fano" | "fano-full" | "crossratio";

export interface PointsDocument {
  points: [string, string, string][];
}

export interface Degeneracy {
  coincident_pairs: number[][];
  collinear_triples: number[][];
  coconic_sextuples: number[][];
  clean: boolean;
}

export interface Certification {
  on_both_cubics: boolean;
  stack_rank_le_8: boolean;
  cayley_identity: boolean | null;
  distinct_from_inputs: boolean;
  certified: boolean;
}

export interface ComputeResult {
  method: Method;
  method_used: string | null;
  triple: number[] | null;
  degeneracy: Degeneracy;
  pencil_nullity: number;
  cubic_basis: [string[], string[]] | null;
  p9: [string, string, string] | null;
  zero_vector: boolean;
  certification: Certification | null;
  counters: { fano_evaluations?: number };
}

export interface ComputeResponse {
  result: ComputeResult;
  meta: { timing_ms: number };
}

export interface ComputeRequest extends PointsDocument {
  method: Method;
}

export async function postCompute(
  baseUrl: string,
  request: ComputeRequest,
  signal?: AbortSignal,
): Promise<ComputeResponse> {
  const response = await fetch(`${baseUrl}/api/compute`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(request),
    signal,
  });
  if (!response.ok) {
    const body = await response.text();
    throw new Error(`compute failed (${response.status}): ${body}`);
  }
  return (await response.json()) as ComputeResponse;
}
