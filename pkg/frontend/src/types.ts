// Shapes of the session service payloads the explorer consumes.

export interface GraphJson {
    name?: string;
    n: number;
    edges: [number, number][];
}

export interface ColoringJson {
    graph: string | GraphJson;
    palette: number;
    vertex_colors: number[];
    edge_colors: number[];
}

export interface ListingJson {
    name: string;
    vertex_counts: number[];
    edge_counts: number[];
    totals: number[];
    beta: number;
    gamma: number;
    is_stc: boolean;
    is_tc: boolean;
    is_equitable: boolean;
    lacunar_colors: number[];
}

export interface SessionState {
    id: string;
    key: string | null;
    graph: GraphJson;
    hamilton: number[] | null;
    coloring: ColoringJson;
    listing: ListingJson;
    beta_edges: number[];
    validation: { is_stc: boolean; is_tc: boolean };
    cursor: number;
    total_steps: number;
    can_undo: boolean;
    can_redo: boolean;
}

export type ElementRef = ["v" | "e", number];

export interface McapJson {
    vertices: number[];
    edges: number[];
    colors: [number, number];
    path: ElementRef[];
}

export interface FlipJson {
    edge: number;
    endpoints: [number, number];
    colors: [number, number];
}

export interface McapsPayload {
    mcaps: McapJson[];
    flips: FlipJson[];
}

export interface TraceStep {
    kind: "swap" | "flip";
    path: ElementRef[];
    colors: number[];
    before: [number, number];
    after: [number, number];
    class: string;
}

export interface TracePayload {
    goal: string;
    goal_reached: boolean;
    steps: TraceStep[];
    initial: ColoringJson;
    final: ColoringJson;
    cursor?: number;
}

export interface MutationResponse {
    session: SessionState;
    last_step: TraceStep | null;
}

export interface AutoResponse {
    session: SessionState;
    goal_reached: boolean;
    applied_steps: TraceStep[];
    nodes_expanded: number;
}

export interface CatalogPayload {
    keys: string[];
    entries: Record<string, { n: number; m: number; has_hamilton: boolean; has_pattern: boolean }>;
}
